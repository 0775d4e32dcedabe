#include "regiongray/lattice.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "regiongray/errors.hpp"

namespace regiongray {

std::vector<ElementPair> FinitePoset::covers() const {
    std::vector<ElementPair> out;
    for (std::size_t x = 0; x < upper_covers.size(); ++x)
        for (std::size_t y : upper_covers[x]) out.emplace_back(x, y);
    return out;
}

bool FinitePoset::is_graded() const {
    for (std::size_t x = 0; x < upper_covers.size(); ++x)
        for (std::size_t y : upper_covers[x])
            if (rank[y] != rank[x] + 1) return false;
    return true;
}

std::vector<std::size_t> FinitePoset::minimal_elements() const {
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < lower_covers.size(); ++x)
        if (lower_covers[x].empty()) out.push_back(x);
    return out;
}

FinitePoset poset_from_covers(std::size_t n, const std::vector<ElementPair>& covers) {
    FinitePoset p;
    p.upper_covers.assign(n, {});
    p.lower_covers.assign(n, {});
    for (auto [x, y] : covers) {
        if (x >= n || y >= n || x == y) throw InputError("invalid cover pair");
        p.upper_covers[x].push_back(y);
        p.lower_covers[y].push_back(x);
    }
    for (auto& v : p.upper_covers) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    for (auto& v : p.lower_covers) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    p.rank.assign(n, 0);
    std::vector<std::size_t> indeg(n);
    std::deque<std::size_t> ready;
    for (std::size_t x = 0; x < n; ++x) {
        indeg[x] = p.lower_covers[x].size();
        if (indeg[x] == 0) ready.push_back(x);
    }
    std::size_t done = 0;
    while (!ready.empty()) {
        std::size_t x = ready.front();
        ready.pop_front();
        ++done;
        for (std::size_t y : p.upper_covers[x]) {
            p.rank[y] = std::max(p.rank[y], p.rank[x] + 1);
            if (--indeg[y] == 0) ready.push_back(y);
        }
    }
    if (done != n) throw InputError("cover relation contains a cycle");
    return p;
}

FinitePoset poset_of_regions(const RegionGraph& rg, std::size_t base) {
    if (base >= rg.size()) throw InputError("base region is not a vertex of the region graph");
    auto dist = bfs_distances(rg.graph, base);
    std::vector<ElementPair> covers;
    for (auto [a, b] : rg.graph.edges()) {
        if (dist[a] < 0 || dist[b] < 0) throw InputError("region graph is disconnected");
        if (dist[b] == dist[a] + 1)
            covers.emplace_back(a, b);
        else if (dist[a] == dist[b] + 1)
            covers.emplace_back(b, a);
        else
            throw InputError("region graph is not bipartite");
    }
    FinitePoset p = poset_from_covers(rg.size(), covers);
    for (std::size_t x = 0; x < rg.size(); ++x)
        if (p.rank[x] != dist[x]) throw StructuralViolation("region poset rank differs from BFS distance");
    return p;
}

UndirectedGraph cover_graph(const FinitePoset& p) {
    UndirectedGraph g(p.size());
    for (auto [x, y] : p.covers()) g.add_edge(x, y);
    g.finalize();
    return g;
}

struct LatticeBuilder {
    static LatticeCheck build(const FinitePoset& p) {
        const std::size_t n = p.size();
        require_within_guard(n, "lattice");
        LatticeCheck out;
        auto minimal = p.minimal_elements();
        if (n == 0 || minimal.size() != 1) {
            out.reason = "poset does not have a unique minimum";
            if (minimal.size() > 1) out.witness = {minimal[0], minimal[1]};
            out.meet_failed = true;
            return out;
        }
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return p.rank[a] < p.rank[b]; });

        FiniteLattice lat;
        lat.poset_ = p;
        lat.down_.assign(n, boost::dynamic_bitset<>(n));
        lat.up_.assign(n, boost::dynamic_bitset<>(n));
        for (std::size_t x : order) {
            lat.down_[x].set(x);
            for (std::size_t l : p.lower_covers[x]) lat.down_[x] |= lat.down_[l];
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            std::size_t x = *it;
            lat.up_[x].set(x);
            for (std::size_t u : p.upper_covers[x]) lat.up_[x] |= lat.up_[u];
        }

        lat.meet_.assign(n * n, 0);
        lat.join_.assign(n * n, 0);
        if (!fill(lat, order, p.lower_covers, lat.down_, false, lat.meet_, out)) {
            out.meet_failed = true;
            return out;
        }
        std::vector<std::size_t> reversed(order.rbegin(), order.rend());
        if (!fill(lat, reversed, p.upper_covers, lat.up_, true, lat.join_, out)) {
            out.meet_failed = false;
            return out;
        }
        lat.bottom_ = order.front();
        lat.top_ = order.back();
        if (lat.up_[lat.bottom_].count() != n || lat.down_[lat.top_].count() != n) {
            out.reason = "poset lacks a maximum";
            return out;
        }
        out.lattice = std::move(lat);
        return out;
    }

    // Fills the meet table (or the join table when called with upper covers and upsets):
    // for x not below y, the meet of x and y is the largest of the meets of y with the lower
    // covers of x, and it must dominate all of them.
    static bool fill(const FiniteLattice& lat, const std::vector<std::size_t>& order,
                     const std::vector<std::vector<std::size_t>>& below, const std::vector<boost::dynamic_bitset<>>& down,
                     bool upward, std::vector<std::uint32_t>& table, LatticeCheck& out) {
        const std::size_t n = lat.size();
        const auto& rank = lat.poset_.rank;
        for (std::size_t x : order) {
            for (std::size_t y = 0; y < n; ++y) {
                std::size_t value;
                if (down[y].test(x)) {
                    value = x;
                } else if (down[x].test(y)) {
                    value = y;
                } else {
                    if (below[x].empty()) {
                        out.witness = {x, y};
                        out.reason = "no common bound";
                        return false;
                    }
                    value = table[below[x].front() * n + y];
                    for (std::size_t l : below[x]) {
                        std::size_t c = table[l * n + y];
                        bool further = upward ? rank[c] < rank[value] : rank[c] > rank[value];
                        if (further) value = c;
                    }
                    for (std::size_t l : below[x]) {
                        std::size_t c = table[l * n + y];
                        if (!down[value].test(c)) {
                            out.witness = {x, y};
                            out.reason = "two incomparable maximal common bounds";
                            return false;
                        }
                    }
                }
                table[x * n + y] = static_cast<std::uint32_t>(value);
            }
        }
        return true;
    }
};

LatticeCheck try_lattice(const FinitePoset& p) { return LatticeBuilder::build(p); }

FiniteLattice make_lattice(const FinitePoset& p) {
    auto check = try_lattice(p);
    if (!check.lattice)
        throw StructuralViolation("poset is not a lattice: " + check.reason + " at (" +
                                  std::to_string(check.witness.first) + ", " + std::to_string(check.witness.second) + ")");
    return std::move(*check.lattice);
}

CongruencePartition CongruencePartition::from_labels(const std::vector<std::size_t>& labels) {
    CongruencePartition part;
    part.class_of.assign(labels.size(), 0);
    std::vector<std::size_t> remap;
    std::vector<std::size_t> label_to_class;
    for (std::size_t x = 0; x < labels.size(); ++x) {
        std::size_t l = labels[x];
        if (l >= label_to_class.size()) label_to_class.resize(l + 1, SIZE_MAX);
        if (label_to_class[l] == SIZE_MAX) {
            label_to_class[l] = part.classes.size();
            part.classes.emplace_back();
        }
        part.class_of[x] = label_to_class[l];
        part.classes[label_to_class[l]].push_back(x);
    }
    return part;
}

CongruencePartition CongruencePartition::discrete(std::size_t n) {
    std::vector<std::size_t> labels(n);
    std::iota(labels.begin(), labels.end(), 0);
    return from_labels(labels);
}

CongruencePartition CongruencePartition::full(std::size_t n) { return from_labels(std::vector<std::size_t>(n, 0)); }

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (b < a) std::swap(a, b);
        parent[b] = a;
        return true;
    }
};

}  // namespace

CongruencePartition congruence_closure(const FiniteLattice& lat, const std::vector<ElementPair>& generators) {
    const std::size_t n = lat.size();
    UnionFind uf(n);
    std::vector<ElementPair> work;
    for (auto [a, b] : generators) {
        if (a >= n || b >= n) throw InputError("generator refers to a missing element");
        work.emplace_back(a, b);
    }
    // Every merged pair propagates through all unary translations z -> z meet x, z join x;
    // the merged pairs generate the equivalence, so this reaches the compatible closure.
    while (!work.empty()) {
        auto [a, b] = work.back();
        work.pop_back();
        if (!uf.unite(a, b)) continue;
        for (std::size_t z = 0; z < n; ++z) {
            std::size_t ma = lat.meet(a, z), mb = lat.meet(b, z);
            if (ma != mb && uf.find(ma) != uf.find(mb)) work.emplace_back(ma, mb);
            std::size_t ja = lat.join(a, z), jb = lat.join(b, z);
            if (ja != jb && uf.find(ja) != uf.find(jb)) work.emplace_back(ja, jb);
        }
    }
    std::vector<std::size_t> labels(n);
    for (std::size_t x = 0; x < n; ++x) labels[x] = uf.find(x);
    return CongruencePartition::from_labels(labels);
}

CongruenceCheck validate_congruence(const FiniteLattice& lat, const CongruencePartition& part) {
    const std::size_t n = lat.size();
    if (part.class_of.size() != n) return {false, "partition size differs from the lattice", {}};
    std::vector<char> seen(n, 0);
    for (std::size_t c = 0; c < part.classes.size(); ++c) {
        if (part.classes[c].empty()) return {false, "empty class", {c}};
        for (std::size_t x : part.classes[c]) {
            if (x >= n || seen[x] || part.class_of[x] != c) return {false, "classes do not partition the elements", {x}};
            seen[x] = 1;
        }
    }
    for (const auto& cls : part.classes) {
        std::size_t rep = cls.front();
        for (std::size_t x : cls) {
            if (x == rep) continue;
            for (std::size_t y = 0; y < n; ++y) {
                if (part.class_of[lat.meet(x, y)] != part.class_of[lat.meet(rep, y)])
                    return {false, "meet is not compatible", {x, rep, y}};
                if (part.class_of[lat.join(x, y)] != part.class_of[lat.join(rep, y)])
                    return {false, "join is not compatible", {x, rep, y}};
            }
        }
    }
    for (std::size_t c = 0; c < part.classes.size(); ++c) {
        const auto& cls = part.classes[c];
        std::size_t lo = cls.front(), hi = cls.front();
        for (std::size_t x : cls) {
            lo = lat.meet(lo, x);
            hi = lat.join(hi, x);
        }
        if ((lat.upset(lo) & lat.downset(hi)).count() != cls.size() || part.class_of[lo] != c)
            return {false, "class is not an interval", {c}};
    }
    return {};
}

FinitePoset quotient_cover_graph(const FiniteLattice& lat, const CongruencePartition& part) {
    std::vector<ElementPair> covers;
    for (auto [x, y] : lat.poset().covers()) {
        std::size_t cx = part.class_of[x], cy = part.class_of[y];
        if (cx != cy) covers.emplace_back(cx, cy);
    }
    std::sort(covers.begin(), covers.end());
    covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
    return poset_from_covers(part.size(), covers);
}

CongruencePartition restrict_congruence(const FiniteLattice& base, const CongruencePartition& part,
                                        const std::vector<std::size_t>& embedding) {
    if (embedding.size() != base.size()) throw InputError("embedding size differs from the base lattice");
    std::vector<std::size_t> labels(base.size());
    for (std::size_t x = 0; x < base.size(); ++x) {
        if (embedding[x] >= part.class_of.size()) throw InputError("embedding leaves the lattice");
        labels[x] = part.class_of[embedding[x]];
    }
    auto restricted = CongruencePartition::from_labels(labels);
    auto check = validate_congruence(base, restricted);
    if (!check.ok) throw StructuralViolation("restricted relation is not a congruence: " + check.reason);
    return restricted;
}

std::vector<std::size_t> class_bottoms(const FiniteLattice& lat, const CongruencePartition& part) {
    std::vector<std::size_t> out;
    for (const auto& cls : part.classes) {
        std::size_t lo = cls.front();
        for (std::size_t x : cls) lo = lat.meet(lo, x);
        out.push_back(lo);
    }
    return out;
}

}  // namespace regiongray
