#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "regiongray/graph.hpp"
#include "regiongray/sign_vector.hpp"

namespace regiongray {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using IndexSet = std::vector<std::size_t>;

// Central arrangement in Q^dim. Normals are stored as primitive integer vectors
// with the orientation the caller supplied; sign-vector coordinate i refers to normal i.
class HyperplaneArrangement {
public:
    HyperplaneArrangement(int dim, const std::vector<std::vector<Rational>>& normals);
    HyperplaneArrangement(int dim, const std::vector<std::vector<long long>>& normals);

    int dim() const { return dim_; }
    std::size_t size() const { return normals_.size(); }
    const std::vector<Integer>& normal(std::size_t i) const { return normals_[i]; }
    const std::vector<std::vector<Integer>>& normals() const { return normals_; }

private:
    void init(int dim, std::vector<std::vector<Integer>> normals);

    int dim_ = 0;
    std::vector<std::vector<Integer>> normals_;
};

int rank(const HyperplaneArrangement& arr);
int rank_of(const HyperplaneArrangement& arr, const IndexSet& subset);
// True when normal `h` lies in the span of the normals listed in `span`.
bool in_span(const HyperplaneArrangement& arr, std::size_t h, const IndexSet& span);

std::uint64_t mask_of(const IndexSet& subset);
IndexSet indices_of(std::uint64_t mask);

// Exact rational point strictly inside the cone of `signs`, or nothing if the cone is empty.
std::optional<std::vector<Rational>> interior_point(const HyperplaneArrangement& arr, const SignVector& signs);
bool is_feasible(const HyperplaneArrangement& arr, const SignVector& signs);
// Sign vector of a point lying on no hyperplane; throws InputError otherwise.
SignVector sign_vector_at(const HyperplaneArrangement& arr, const std::vector<Rational>& point);

// All regions, sorted lexicographically with '+' before '-'.
std::vector<SignVector> enumerate_regions(const HyperplaneArrangement& arr);

struct RegionGraph {
    std::vector<SignVector> regions;
    UndirectedGraph graph;

    std::size_t size() const { return regions.size(); }
    std::optional<std::size_t> find(const SignVector& r) const;
    std::size_t index_of(const SignVector& r) const;
    // Index of the hyperplane separating two adjacent regions.
    int crossing(std::size_t a, std::size_t b) const;

    std::unordered_map<SignVector, std::size_t> lookup;
};

RegionGraph build_region_graph(const HyperplaneArrangement& arr);
// Region graph of an explicit feasible region set (edges: Hamming distance one).
RegionGraph region_graph_from(std::vector<SignVector> regions);
// Empty when the graph is connected, bipartite and of even order; otherwise a description.
std::optional<std::string> region_graph_problem(const RegionGraph& rg);

SignVector opposite_region(const SignVector& r);

struct SupersolvableChain {
    // Nested index sets, bottom first; the last level holds every hyperplane.
    std::vector<IndexSet> levels;
};

bool check_supersolvable_split(const HyperplaneArrangement& arr, const IndexSet& h0, const IndexSet& h1);
bool validate_chain(const HyperplaneArrangement& arr, const SupersolvableChain& chain);
// Searches for a chain, trying closed coatom subsets in a deterministic order.
std::optional<SupersolvableChain> find_supersolvable_chain(const HyperplaneArrangement& arr);

struct FiberPartition {
    std::uint64_t h0_mask = 0;
    std::uint64_t h1_mask = 0;
    std::vector<std::size_t> fiber_of;           // region index -> fiber id
    std::vector<SignVector> projections;         // fiber id -> region of H0 (masked sign vector)
    std::vector<std::vector<std::size_t>> paths; // fiber id -> region indices along the path
};

// Groups regions by their H0 signs. Every path starts at the end whose H1 signs agree
// across all fibers, so paths[f][i] is the copy (f, i) of the suspension.
FiberPartition fiber_partition(const RegionGraph& rg, const IndexSet& h0, const IndexSet& h1);
// Checks the suspension shape: cross edges join equal offsets, and adjacent fibers are
// joined at both ends. Empty when fine.
std::optional<std::string> suspension_problem(const RegionGraph& rg, const FiberPartition& fp);

struct ChainLevel {
    std::uint64_t mask = 0;      // hyperplanes present at this level
    std::uint64_t new_mask = 0;  // hyperplanes added at this level
    std::vector<SignVector> regions;
    std::unordered_map<SignVector, std::size_t> index;

    bool contains(const SignVector& r) const { return index.count(r) != 0; }
};

std::vector<std::uint64_t> chain_masks(const SupersolvableChain& chain);
// Restricts the full region set to each nested mask.
std::vector<ChainLevel> chain_levels(const std::vector<SignVector>& regions, const std::vector<std::uint64_t>& masks);

bool is_canonical_base(const std::vector<ChainLevel>& levels, const SignVector& r);
std::vector<SignVector> canonical_base_regions(const RegionGraph& rg, const SupersolvableChain& chain);
std::vector<SignVector> canonical_base_regions(const HyperplaneArrangement& arr, const SupersolvableChain& chain);

}  // namespace regiongray
