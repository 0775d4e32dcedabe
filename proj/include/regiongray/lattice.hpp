#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "regiongray/arrangement.hpp"
#include "regiongray/graph.hpp"

namespace regiongray {

using ElementPair = std::pair<std::size_t, std::size_t>;

struct FinitePoset {
    std::vector<std::vector<std::size_t>> upper_covers;
    std::vector<std::vector<std::size_t>> lower_covers;
    // Length of the longest chain from a minimal element; equals the grading when graded.
    std::vector<int> rank;

    std::size_t size() const { return rank.size(); }
    std::vector<ElementPair> covers() const;
    bool is_graded() const;
    std::vector<std::size_t> minimal_elements() const;
};

// Builds a poset from cover pairs (x, y) meaning x is covered by y. Throws InputError on cycles.
FinitePoset poset_from_covers(std::size_t n, const std::vector<ElementPair>& covers);
// Orients region-graph edges away from `base`; rank is the BFS distance.
FinitePoset poset_of_regions(const RegionGraph& rg, std::size_t base);
UndirectedGraph cover_graph(const FinitePoset& p);

class FiniteLattice {
public:
    std::size_t size() const { return poset_.size(); }
    const FinitePoset& poset() const { return poset_; }

    std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * size() + b]; }
    std::size_t join(std::size_t a, std::size_t b) const { return join_[a * size() + b]; }
    bool leq(std::size_t a, std::size_t b) const { return down_[b].test(a); }
    std::size_t bottom() const { return bottom_; }
    std::size_t top() const { return top_; }
    const boost::dynamic_bitset<>& downset(std::size_t x) const { return down_[x]; }
    const boost::dynamic_bitset<>& upset(std::size_t x) const { return up_[x]; }

private:
    friend struct LatticeBuilder;
    FinitePoset poset_;
    std::vector<std::uint32_t> meet_;
    std::vector<std::uint32_t> join_;
    std::vector<boost::dynamic_bitset<>> down_;
    std::vector<boost::dynamic_bitset<>> up_;
    std::size_t bottom_ = 0;
    std::size_t top_ = 0;
};

struct LatticeCheck {
    std::optional<FiniteLattice> lattice;
    // When not a lattice: a pair without a unique meet (meet_failed) or join.
    ElementPair witness{0, 0};
    bool meet_failed = false;
    std::string reason;
};

// Refuses posets larger than max_elements() with SizeGuardError.
LatticeCheck try_lattice(const FinitePoset& p);
// Like try_lattice but throws StructuralViolation when the poset is not a lattice.
FiniteLattice make_lattice(const FinitePoset& p);

struct CongruencePartition {
    std::vector<std::size_t> class_of;
    // Classes ordered by smallest member; members sorted.
    std::vector<std::vector<std::size_t>> classes;

    std::size_t size() const { return classes.size(); }
    static CongruencePartition from_labels(const std::vector<std::size_t>& labels);
    static CongruencePartition discrete(std::size_t n);
    static CongruencePartition full(std::size_t n);
};

CongruencePartition congruence_closure(const FiniteLattice& lat, const std::vector<ElementPair>& generators);

struct CongruenceCheck {
    bool ok = true;
    std::string reason;
    std::vector<std::size_t> witness;
};

CongruenceCheck validate_congruence(const FiniteLattice& lat, const CongruencePartition& part);
// Poset on class ids: X covered by Y iff some x in X is covered by some y in Y.
FinitePoset quotient_cover_graph(const FiniteLattice& lat, const CongruencePartition& part);
// x ~ y iff embedding[x] and embedding[y] are congruent; validated on `base`.
CongruencePartition restrict_congruence(const FiniteLattice& base, const CongruencePartition& part,
                                        const std::vector<std::size_t>& embedding);
std::vector<std::size_t> class_bottoms(const FiniteLattice& lat, const CongruencePartition& part);

}  // namespace regiongray
