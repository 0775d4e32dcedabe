#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "regiongray/coxeter.hpp"
#include "regiongray/graph.hpp"
#include "regiongray/zigzag.hpp"

namespace regiongray {

// Convex (2n+2)-gon with vertices 0, 1, ..., n, ~0, ~1, ..., ~n in cyclic order. Vertex k
// sits at position k and ~k at position n+1+k, so negation is the antipodal map.
struct SymmetricTriangulation {
    int n = 0;
    std::vector<std::pair<int, int>> diagonals;  // positions, first < second, sorted

    friend bool operator==(const SymmetricTriangulation&, const SymmetricTriangulation&) = default;
    friend auto operator<=>(const SymmetricTriangulation&, const SymmetricTriangulation&) = default;
};

int polygon_size(int n);
int antipode(int n, int position);
// Nonzero signed value to position; 0 maps to position 0.
int value_position(int n, int value);
// Signed value at a position; both 0 and ~0 give 0.
int position_value(int n, int position);

// Empty when valid; otherwise the first violated invariant.
std::string triangulation_problem(const SymmetricTriangulation& t);
SymmetricTriangulation make_triangulation(int n, std::vector<std::pair<int, int>> diagonals);

bool is_2bar31_avoiding(const FullNotation& f);
// The three-condition characterization through the decomposition.
bool avoids_by_decomposition(const FullNotation& f);
std::vector<FullNotation> avoiding_signed_permutations(int n);

struct Decomposition {
    std::vector<int> sigma_L;
    std::vector<int> tau;
    std::vector<int> sigma_R;
    std::vector<std::vector<int>> pockets;  // blocks of sigma_R, empty ones omitted
    std::vector<int> y;                      // absolute values in tau, increasing
    int boundary = 0;                        // largest i > 0 with pi_i < 0, else 0
};

Decomposition split_full_notation(const FullNotation& f);
// Throws InputError unless f is 2bar31-avoiding.
Decomposition decompose(const FullNotation& f);

// Listing of the triangulation inside the polygon on positions lo..hi entered through lo-hi.
std::vector<int> type_a_traversal(const SymmetricTriangulation& t, int lo, int hi);

FullNotation pi_map(const SymmetricTriangulation& t);
SymmetricTriangulation theta_map(const FullNotation& f);

struct Jump {
    int value = 0;       // the positive symbol that moves
    int direction = 0;   // -1 left, +1 right
    int distance = 0;
    FullNotation result;
};

// Moves `value` one place in `direction`, mirroring the move on its negative. Returns false
// when the neighbor is missing or not smaller.
bool jump_step(FullNotation& f, int value, int direction);

std::vector<Jump> minimal_jumps(const FullNotation& f);
// Reference: shortest step-by-step move of every positive symbol in both directions.
std::vector<Jump> minimal_jumps_brute_force(const FullNotation& f);

// Flips the diagonal (and its mirror unless it is a diameter). Throws InputError when the
// pair is not a diagonal of t.
SymmetricTriangulation apply_flip(const SymmetricTriangulation& t, std::pair<int, int> diagonal);
std::vector<SymmetricTriangulation> flip_neighbors(const SymmetricTriangulation& t);
bool differ_by_flip(const SymmetricTriangulation& a, const SymmetricTriangulation& b);

// Brute force over all triangulations of the (2n+2)-gon; n <= 6.
std::vector<SymmetricTriangulation> enumerate_symmetric_triangulations(int n);

struct FlipGraph {
    std::vector<SymmetricTriangulation> vertices;  // sorted
    UndirectedGraph graph;
    std::size_t index_of(const SymmetricTriangulation& t) const;
};

FlipGraph flip_graph(int n);
bool verify_flip_jump(int n);

struct TriangulationListing {
    std::vector<SymmetricTriangulation> triangulations;
    std::vector<FullNotation> permutations;  // class bottoms, in the same order
    bool cyclic = false;
};

TriangulationListing triangulation_gray_code(int n);

std::string vertex_token(int n, int position);
std::string format_triangulation(const SymmetricTriangulation& t);
SymmetricTriangulation parse_triangulation(int n, std::string_view text);

}  // namespace regiongray
