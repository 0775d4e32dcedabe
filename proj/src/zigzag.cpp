#include "regiongray/zigzag.hpp"

#include <algorithm>
#include <unordered_map>

#include "regiongray/errors.hpp"

namespace regiongray {

namespace {

void require_canonical(const RegionGraph& rg, const SupersolvableChain& chain, const SignVector& base) {
    if (!rg.find(base)) throw InputError("base " + base.str() + " is not a region");
    auto levels = chain_levels(rg.regions, chain_masks(chain));
    if (!is_canonical_base(levels, base)) throw InputError("base " + base.str() + " is not a canonical base region");
}

// Fibers of level j over the regions of level j-1, each sorted from the end whose
// new-hyperplane signs agree with the base.
std::unordered_map<SignVector, std::vector<SignVector>> fibers_of(const ChainLevel& below, const ChainLevel& level,
                                                                  const SignVector& base) {
    std::unordered_map<SignVector, std::vector<SignVector>> out;
    for (const auto& r : level.regions) out[r.masked(below.mask)].push_back(r);
    const std::uint64_t fresh = level.new_mask;
    const std::size_t length = static_cast<std::size_t>(std::popcount(fresh)) + 1;
    for (auto& [proj, fiber] : out) {
        auto offset = [&](const SignVector& r) { return std::popcount((r.bits() ^ base.bits()) & fresh); };
        std::sort(fiber.begin(), fiber.end(), [&](const SignVector& a, const SignVector& b) { return offset(a) < offset(b); });
        if (fiber.size() != length) throw StructuralViolation("fiber over " + proj.str() + " has the wrong length");
        for (std::size_t i = 0; i < fiber.size(); ++i) {
            if (offset(fiber[i]) != static_cast<int>(i))
                throw StructuralViolation("fiber over " + proj.str() + " is not aligned with the base region");
            if (i > 0 && hamming(fiber[i - 1], fiber[i]) != 1)
                throw StructuralViolation("fiber over " + proj.str() + " is not a path");
        }
    }
    return out;
}

std::vector<ChainLevel> traversal_levels(const RegionGraph& rg, const SupersolvableChain& chain, const SignVector& base) {
    return chain_levels(rg.regions, traversal_masks(rg, chain, base));
}

}  // namespace

std::vector<std::uint64_t> traversal_masks(const RegionGraph& rg, const SupersolvableChain& chain, const SignVector& base) {
    auto masks = chain_masks(chain);
    if (masks.empty()) throw InputError("a chain needs at least one level");
    std::uint64_t bottom = masks.front();
    if (std::popcount(bottom) >= 2) {
        auto bottom_level = chain_levels(rg.regions, {bottom});
        SignVector b = base.masked(bottom);
        int wall = -1;
        for (std::size_t h : indices_of(bottom)) {
            if (bottom_level.front().contains(b.flipped(static_cast<int>(h)))) {
                wall = static_cast<int>(h);
                break;
            }
        }
        if (wall < 0) throw StructuralViolation("base region has no wall in the bottom level");
        masks.insert(masks.begin(), std::uint64_t{1} << wall);
    }
    return masks;
}

void annotate_steps(const RegionGraph& rg, Listing& listing) {
    listing.steps.clear();
    for (std::size_t i = 1; i < listing.order.size(); ++i)
        listing.steps.push_back(rg.crossing(listing.order[i - 1], listing.order[i]));
    if (listing.cyclic && listing.order.size() > 1)
        listing.steps.push_back(rg.crossing(listing.order.back(), listing.order.front()));
}

Listing zigzag_cycle(const RegionGraph& rg, const SupersolvableChain& chain, const SignVector& base) {
    require_canonical(rg, chain, base);
    auto levels = traversal_levels(rg, chain, base);

    SignVector b0 = base.masked(levels.front().mask);
    std::vector<SignVector> current{b0, b0.flipped(std::countr_zero(levels.front().mask))};
    for (std::size_t j = 1; j < levels.size(); ++j) {
        auto fibers = fibers_of(levels[j - 1], levels[j], base);
        std::vector<SignVector> next;
        next.reserve(levels[j].regions.size());
        for (std::size_t k = 0; k < current.size(); ++k) {
            const auto& fiber = fibers.at(current[k]);
            if (k % 2 == 0)
                next.insert(next.end(), fiber.begin(), fiber.end());
            else
                next.insert(next.end(), fiber.rbegin(), fiber.rend());
        }
        current = std::move(next);
    }
    Listing out;
    out.cyclic = true;
    for (const auto& r : current) out.order.push_back(rg.index_of(r));
    annotate_steps(rg, out);
    return out;
}

Listing ham_cycle_supersolvable(const HyperplaneArrangement& arr, const SupersolvableChain& chain,
                                std::optional<SignVector> base) {
    if (rank(arr) < 2) throw InputError("Hamiltonian cycles need rank at least 2");
    if (!validate_chain(arr, chain)) throw InputError("chain is not a supersolvable chain");
    RegionGraph rg = build_region_graph(arr);
    if (!base) {
        auto canonical = canonical_base_regions(rg, chain);
        if (canonical.empty()) throw StructuralViolation("no canonical base region");
        base = canonical.front();
    }
    return zigzag_cycle(rg, chain, *base);
}

Listing greedy_traversal(const RegionGraph& rg, const SupersolvableChain& chain, const SignVector& start) {
    require_canonical(rg, chain, start);
    auto masks = traversal_masks(rg, chain, start);
    std::vector<std::vector<int>> groups;
    std::uint64_t prev = 0;
    for (auto m : masks) {
        std::vector<int> g;
        for (std::size_t h : indices_of(m & ~prev)) g.push_back(static_cast<int>(h));
        groups.push_back(std::move(g));
        prev = m;
    }
    std::vector<char> visited(rg.size(), 0);
    std::size_t cur = rg.index_of(start);
    visited[cur] = 1;
    Listing out;
    out.order.push_back(cur);
    while (out.order.size() < rg.size()) {
        bool moved = false;
        for (auto level = groups.rbegin(); level != groups.rend() && !moved; ++level) {
            for (int h : *level) {
                auto next = rg.find(rg.regions[cur].flipped(h));
                if (next && !visited[*next]) {
                    cur = *next;
                    visited[cur] = 1;
                    out.order.push_back(cur);
                    moved = true;
                    break;
                }
            }
        }
        if (!moved) throw StructuralViolation("greedy traversal got stuck at " + rg.regions[cur].str());
    }
    out.cyclic = out.order.size() == 1 || rg.graph.adjacent(out.order.back(), out.order.front());
    annotate_steps(rg, out);
    return out;
}

Listing ham_path_quotient(const RegionGraph& rg, const SupersolvableChain& chain, const SignVector& base,
                          const CongruencePartition& cong, const QuotientOptions& options) {
    require_canonical(rg, chain, base);
    if (cong.class_of.size() != rg.size()) throw InputError("congruence size differs from the region count");
    {
        FiniteLattice top = make_lattice(poset_of_regions(rg, rg.index_of(base)));
        auto check = validate_congruence(top, cong);
        if (!check.ok) throw InputError("not a lattice congruence: " + check.reason);
    }
    auto levels = traversal_levels(rg, chain, base);
    const std::size_t top = levels.size() - 1;

    std::vector<CongruencePartition> parts(levels.size());
    parts[top] = cong;
    for (std::size_t j = top; j >= 1; --j) {
        const ChainLevel& below = levels[j - 1];
        const std::uint64_t anchor = base.bits() & levels[j].new_mask;
        std::vector<std::size_t> embedding(below.regions.size());
        for (std::size_t x = 0; x < below.regions.size(); ++x) {
            SignVector bottom(base.size(), below.regions[x].bits() | anchor);
            auto it = levels[j].index.find(bottom);
            if (it == levels[j].index.end()) throw StructuralViolation("fiber bottom missing over " + below.regions[x].str());
            embedding[x] = it->second;
        }
        if (options.validate_levels) {
            RegionGraph lower = region_graph_from(below.regions);
            FiniteLattice lat = make_lattice(poset_of_regions(lower, lower.index_of(base.masked(below.mask))));
            parts[j - 1] = restrict_congruence(lat, parts[j], embedding);
        } else {
            std::vector<std::size_t> labels(embedding.size());
            for (std::size_t x = 0; x < embedding.size(); ++x) labels[x] = parts[j].class_of[embedding[x]];
            parts[j - 1] = CongruencePartition::from_labels(labels);
        }
    }

    const ChainLevel& l0 = levels.front();
    SignVector b0 = base.masked(l0.mask);
    std::vector<std::size_t> path{parts[0].class_of[l0.index.at(b0)]};
    std::size_t other = parts[0].class_of[l0.index.at(b0.flipped(std::countr_zero(l0.mask)))];
    if (other != path.front()) path.push_back(other);

    for (std::size_t j = 1; j <= top; ++j) {
        const ChainLevel& below = levels[j - 1];
        auto fibers = fibers_of(below, levels[j], base);
        auto class_chain = [&](std::size_t x) {
            std::vector<std::size_t> seq;
            for (const auto& r : fibers.at(below.regions[x])) {
                std::size_t c = parts[j].class_of[levels[j].index.at(r)];
                if (seq.empty() || seq.back() != c) seq.push_back(c);
            }
            return seq;
        };
        std::vector<std::size_t> next;
        for (std::size_t k = 0; k < path.size(); ++k) {
            const auto& members = parts[j - 1].classes[path[k]];
            auto seq = class_chain(members.front());
            for (std::size_t x : members)
                if (class_chain(x) != seq)
                    throw StructuralViolation("fibers of one restricted class carry different class chains");
            if (k % 2 == 0)
                next.insert(next.end(), seq.begin(), seq.end());
            else
                next.insert(next.end(), seq.rbegin(), seq.rend());
        }
        path = std::move(next);
    }
    Listing out;
    out.order = std::move(path);
    out.steps.assign(out.order.empty() ? 0 : out.order.size() - 1, -1);
    return out;
}

}  // namespace regiongray
