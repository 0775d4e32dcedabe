#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "regiongray/arrangement.hpp"
#include "regiongray/coxeter.hpp"
#include "regiongray/zigzag.hpp"

namespace regiongray {

struct SignedEdge {
    int low = 0;   // 1-indexed, low < high
    int high = 0;
    bool negative = false;
};

// Simple signed graph on vertices 1..n. Edges are kept sorted by (high, low); that order
// is the hyperplane order of graph_arrangement.
class SignedGraph {
public:
    SignedGraph() = default;
    SignedGraph(int n, const std::vector<std::pair<int, int>>& pos_edges,
                const std::vector<std::pair<int, int>>& neg_edges = {});

    int vertex_count() const { return n_; }
    const std::vector<SignedEdge>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }
    bool is_signed() const;
    // Index of the edge joining u and v, if any.
    std::optional<std::size_t> edge_between(int u, int v) const;

    static SignedGraph complete(int n);
    static SignedGraph path(int n);
    static SignedGraph cycle(int n);

private:
    int n_ = 0;
    std::vector<SignedEdge> edges_;
};

struct EliminationResult {
    std::vector<int> order;        // full elimination order when found
    std::vector<int> stuck;        // remaining vertices without a (signed) simplicial vertex otherwise
    bool found() const { return stuck.empty(); }
};

// Greedy removal of simplicial vertices, smallest label first. Uses only positive edges
// semantics: a signed graph is treated as its underlying graph.
EliminationResult find_peo(const SignedGraph& g);
EliminationResult find_signed_peo(const SignedGraph& g);
bool is_signed_simplicial(const SignedGraph& g, int v, const std::vector<char>& removed);

// Normals e_i - e_j for positive and e_i + e_j for negative edges, in edge order,
// with the chain read off a signed perfect elimination ordering.
ArrangementFamily graph_arrangement(const SignedGraph& g);
// Just the hyperplanes; no elimination ordering needed.
HyperplaneArrangement graph_hyperplanes(const SignedGraph& g);

// One bit per edge: true when the half-edge at the low endpoint points into it.
// For a positive edge the other half-edge then points away from the high endpoint;
// for a negative edge it points into the high endpoint as well.
struct SignedOrientation {
    std::vector<char> into_low;

    friend bool operator==(const SignedOrientation&, const SignedOrientation&) = default;
    friend auto operator<=>(const SignedOrientation&, const SignedOrientation&) = default;
};

bool half_edge_into(const SignedEdge& e, bool into_low, int endpoint);

SignedOrientation region_to_orientation(const SignedGraph& g, const SignVector& r);
// Throws InputError on a cyclic orientation.
SignVector orientation_to_region(const SignedGraph& g, const SignedOrientation& o);

bool is_acyclic_signed(const SignedGraph& g, const SignedOrientation& o);

// Refuses graphs with more than 20 edges.
std::vector<SignedOrientation> brute_force_acyclic_orientations(const SignedGraph& g);

struct OrientationListing {
    Listing listing;
    RegionGraph regions;
    std::vector<SignedOrientation> orientations;  // in listing order
};

OrientationListing acyclic_orientation_gray_code(const SignedGraph& g);

// One token per edge in edge order: "1->2", "1<-2", "1<->2" (both half-edges point into
// their endpoints) or "1>-<2" (both point away).
std::string format_orientation(const SignedGraph& g, const SignedOrientation& o);
SignedOrientation parse_orientation(const SignedGraph& g, std::string_view text);
std::string orientation_to_dot(const SignedGraph& g, const SignedOrientation& o);

}  // namespace regiongray
