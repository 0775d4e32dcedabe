#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "regiongray/arrangement.hpp"
#include "regiongray/graph.hpp"
#include "regiongray/lattice.hpp"

namespace regiongray {

struct Listing {
    std::vector<std::size_t> order;  // region indices, or class ids for quotient listings
    bool cyclic = false;
    std::vector<int> steps;          // hyperplane crossed after each entry, wrapping around when cyclic (-1 if none)
};

// Chain masks used by the traversals. A bottom level of rank two is split further by its
// lowest-index wall through the base region, so the recursion always bottoms out at a
// single hyperplane.
std::vector<std::uint64_t> traversal_masks(const RegionGraph& rg, const SupersolvableChain& chain, const SignVector& base);

// Zigzag Hamiltonian cycle on the regions. Works for every rank; the arrangement-level
// overload below enforces rank >= 2, validates the chain and defaults the base to the
// first canonical region.
Listing zigzag_cycle(const RegionGraph& rg, const SupersolvableChain& chain, const SignVector& base);
Listing ham_cycle_supersolvable(const HyperplaneArrangement& arr, const SupersolvableChain& chain,
                                std::optional<SignVector> base = std::nullopt);

Listing greedy_traversal(const RegionGraph& rg, const SupersolvableChain& chain, const SignVector& start);

struct QuotientOptions {
    // Rebuild every lower lattice and check each restricted relation is a congruence.
    bool validate_levels = true;
};

// Hamiltonian path on the classes of `cong`, a congruence of the region lattice based at `base`.
Listing ham_path_quotient(const RegionGraph& rg, const SupersolvableChain& chain, const SignVector& base,
                          const CongruencePartition& cong, const QuotientOptions& options = {});

// Fills Listing::steps from region indices.
void annotate_steps(const RegionGraph& rg, Listing& listing);

}  // namespace regiongray
