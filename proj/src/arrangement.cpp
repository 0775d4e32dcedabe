#include "regiongray/arrangement.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "regiongray/errors.hpp"

namespace regiongray {

namespace {

using Row = std::vector<Integer>;

Integer gcd_int(Integer a, Integer b) {
    a = abs(a);
    b = abs(b);
    while (b != 0) {
        Integer t = a % b;
        a = b;
        b = t;
    }
    return a;
}

void make_primitive(Row& r) {
    Integer g = 0;
    for (const auto& v : r) g = gcd_int(g, v);
    if (g > 1)
        for (auto& v : r) v /= g;
}

Row canonical_direction(Row r) {
    make_primitive(r);
    for (const auto& v : r) {
        if (v == 0) continue;
        if (v < 0)
            for (auto& w : r) w = -w;
        break;
    }
    return r;
}

Rational dot(const Row& a, const std::vector<Rational>& x) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) s += Rational(a[i]) * x[i];
    return s;
}

bool all_zero(const Row& r) {
    return std::all_of(r.begin(), r.end(), [](const Integer& v) { return v == 0; });
}

// Fourier-Motzkin elimination for the homogeneous strict system {row . x > 0}.
// Returns a solution obtained by back-substitution, or nothing if infeasible.
std::optional<std::vector<Rational>> solve_strict(std::vector<Row> rows, int dim) {
    struct Stage {
        std::vector<Row> lower;  // positive coefficient on the eliminated variable
        std::vector<Row> upper;  // negative coefficient
    };
    for (const auto& r : rows)
        if (all_zero(r)) return std::nullopt;

    std::vector<Stage> stages(static_cast<std::size_t>(dim));
    for (int d = dim - 1; d >= 0; --d) {
        Stage& st = stages[static_cast<std::size_t>(d)];
        std::vector<Row> next;
        for (auto& r : rows) {
            if (r[d] > 0)
                st.lower.push_back(r);
            else if (r[d] < 0)
                st.upper.push_back(r);
            else
                next.push_back(r);
        }
        for (const auto& p : st.lower) {
            for (const auto& q : st.upper) {
                Row c(static_cast<std::size_t>(dim));
                Integer a = -q[d];
                const Integer& b = p[d];
                for (int i = 0; i < d; ++i) c[i] = a * p[i] + b * q[i];
                if (all_zero(c)) return std::nullopt;
                make_primitive(c);
                next.push_back(std::move(c));
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        rows = std::move(next);
    }

    std::vector<Rational> x(static_cast<std::size_t>(dim), Rational(0));
    for (int d = 0; d < dim; ++d) {
        const Stage& st = stages[static_cast<std::size_t>(d)];
        std::optional<Rational> lo, hi;
        for (const auto& p : st.lower) {
            Rational b = -dot(p, x) / Rational(p[d]);
            if (!lo || b > *lo) lo = b;
        }
        for (const auto& q : st.upper) {
            Rational b = -dot(q, x) / Rational(q[d]);
            if (!hi || b < *hi) hi = b;
        }
        if (lo && hi) {
            if (!(*lo < *hi)) return std::nullopt;
            x[d] = (*lo + *hi) / 2;
        } else if (lo) {
            x[d] = *lo + 1;
        } else if (hi) {
            x[d] = *hi - 1;
        }
    }
    return x;
}

bool satisfies(const std::vector<Row>& rows, const std::vector<Rational>& x) {
    return std::all_of(rows.begin(), rows.end(), [&](const Row& r) { return dot(r, x) > 0; });
}

Row signed_row(const Row& normal, int sign) {
    Row r = normal;
    if (sign < 0)
        for (auto& v : r) v = -v;
    return r;
}

// Point on the far side of the new hyperplane inside an old region, found by stepping
// from the projection of the known point onto the hyperplane; nothing if that projection
// is not interior to the old region.
std::optional<std::vector<Rational>> push_across(const std::vector<Row>& old_rows, const Row& target,
                                                 const std::vector<Rational>& p) {
    Rational hh = 0;
    for (const auto& v : target) hh += Rational(v * v);
    Rational d = dot(target, p);
    std::vector<Rational> p0 = p;
    for (std::size_t i = 0; i < p.size(); ++i) p0[i] -= d / hh * Rational(target[i]);

    Rational eps = 1;
    for (const auto& r : old_rows) {
        Rational a = dot(r, p0);
        if (a <= 0) return std::nullopt;
        Rational rv = 0;
        for (std::size_t i = 0; i < r.size(); ++i) rv += Rational(r[i] * target[i]);
        if (rv < 0) {
            Rational bound = a / (-rv) / 2;
            if (bound < eps) eps = bound;
        }
    }
    std::vector<Rational> q = p0;
    for (std::size_t i = 0; i < q.size(); ++i) q[i] += eps * Rational(target[i]);
    if (dot(target, q) <= 0 || !satisfies(old_rows, q)) return std::nullopt;
    return q;
}

}  // namespace

HyperplaneArrangement::HyperplaneArrangement(int dim, const std::vector<std::vector<Rational>>& normals) {
    std::vector<std::vector<Integer>> ints;
    for (const auto& v : normals) {
        if (static_cast<int>(v.size()) != dim) throw InputError("normal length does not match the dimension");
        Integer l = 1;
        for (const auto& q : v) {
            Integer den = denominator(q);
            l = l / gcd_int(l, den) * den;
        }
        Row r;
        for (const auto& q : v) r.push_back(numerator(q) * (l / denominator(q)));
        ints.push_back(std::move(r));
    }
    init(dim, std::move(ints));
}

HyperplaneArrangement::HyperplaneArrangement(int dim, const std::vector<std::vector<long long>>& normals) {
    std::vector<std::vector<Integer>> ints;
    for (const auto& v : normals) {
        if (static_cast<int>(v.size()) != dim) throw InputError("normal length does not match the dimension");
        ints.emplace_back(v.begin(), v.end());
    }
    init(dim, std::move(ints));
}

void HyperplaneArrangement::init(int dim, std::vector<std::vector<Integer>> normals) {
    if (dim < 1) throw InputError("dimension must be positive");
    if (normals.empty()) throw InputError("an arrangement needs at least one hyperplane");
    if (normals.size() > static_cast<std::size_t>(SignVector::max_size))
        throw InputError("at most 64 hyperplanes are supported");
    std::set<Row> seen;
    for (std::size_t i = 0; i < normals.size(); ++i) {
        if (all_zero(normals[i])) throw InputError("normal " + std::to_string(i) + " is zero");
        make_primitive(normals[i]);
        if (!seen.insert(canonical_direction(normals[i])).second)
            throw InputError("normal " + std::to_string(i) + " is parallel to an earlier one");
    }
    dim_ = dim;
    normals_ = std::move(normals);
}

int rank_of(const HyperplaneArrangement& arr, const IndexSet& subset) {
    std::vector<std::vector<Rational>> m;
    for (std::size_t i : subset) {
        if (i >= arr.size()) throw InputError("hyperplane index out of range");
        std::vector<Rational> row;
        for (const auto& v : arr.normal(i)) row.emplace_back(v);
        m.push_back(std::move(row));
    }
    int r = 0;
    const int cols = arr.dim();
    for (int c = 0; c < cols && r < static_cast<int>(m.size()); ++c) {
        int piv = -1;
        for (int i = r; i < static_cast<int>(m.size()); ++i)
            if (m[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        for (int i = r + 1; i < static_cast<int>(m.size()); ++i) {
            if (m[i][c] == 0) continue;
            Rational f = m[i][c] / m[r][c];
            for (int k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
        }
        ++r;
    }
    return r;
}

int rank(const HyperplaneArrangement& arr) {
    IndexSet all(arr.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return rank_of(arr, all);
}

bool in_span(const HyperplaneArrangement& arr, std::size_t h, const IndexSet& span) {
    IndexSet with = span;
    with.push_back(h);
    return rank_of(arr, with) == rank_of(arr, span);
}

std::uint64_t mask_of(const IndexSet& subset) {
    std::uint64_t m = 0;
    for (std::size_t i : subset) {
        if (i >= 64) throw InputError("hyperplane index out of range");
        m |= std::uint64_t{1} << i;
    }
    return m;
}

IndexSet indices_of(std::uint64_t mask) {
    IndexSet out;
    while (mask != 0) {
        out.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
        mask &= mask - 1;
    }
    return out;
}

std::optional<std::vector<Rational>> interior_point(const HyperplaneArrangement& arr, const SignVector& signs) {
    if (signs.size() != static_cast<int>(arr.size())) throw InputError("sign vector length does not match");
    std::vector<Row> rows;
    for (std::size_t i = 0; i < arr.size(); ++i) rows.push_back(signed_row(arr.normal(i), signs.sign(static_cast<int>(i))));
    auto x = solve_strict(rows, arr.dim());
    if (x && !satisfies(rows, *x)) throw StructuralViolation("elimination produced an uncertified point");
    return x;
}

bool is_feasible(const HyperplaneArrangement& arr, const SignVector& signs) {
    return interior_point(arr, signs).has_value();
}

SignVector sign_vector_at(const HyperplaneArrangement& arr, const std::vector<Rational>& point) {
    if (point.size() != static_cast<std::size_t>(arr.dim())) throw InputError("point has the wrong dimension");
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        Rational d = dot(arr.normal(i), point);
        if (d == 0) throw InputError("point lies on hyperplane " + std::to_string(i));
        if (d < 0) bits |= std::uint64_t{1} << i;
    }
    return SignVector(static_cast<int>(arr.size()), bits);
}

std::vector<SignVector> enumerate_regions(const HyperplaneArrangement& arr) {
    struct Partial {
        std::uint64_t bits;
        std::vector<Rational> point;
    };
    std::vector<Partial> current{{0, std::vector<Rational>(static_cast<std::size_t>(arr.dim()), Rational(0))}};
    for (std::size_t k = 0; k < arr.size(); ++k) {
        const Row& h = arr.normal(k);
        std::vector<Partial> next;
        for (auto& part : current) {
            std::vector<Row> old_rows;
            for (std::size_t i = 0; i < k; ++i)
                old_rows.push_back(signed_row(arr.normal(i), (part.bits >> i) & 1U ? -1 : 1));
            Rational d = dot(h, part.point);
            for (int side : {1, -1}) {
                std::uint64_t bits = part.bits | (side < 0 ? std::uint64_t{1} << k : 0);
                if ((side > 0 && d > 0) || (side < 0 && d < 0)) {
                    next.push_back({bits, part.point});
                    continue;
                }
                Row target = signed_row(h, side);
                auto q = push_across(old_rows, target, part.point);
                if (!q) {
                    std::vector<Row> rows = old_rows;
                    rows.push_back(target);
                    q = solve_strict(rows, arr.dim());
                    if (q && !satisfies(rows, *q)) throw StructuralViolation("elimination produced an uncertified point");
                }
                if (q) next.push_back({bits, std::move(*q)});
            }
        }
        current = std::move(next);
    }
    std::vector<SignVector> out;
    out.reserve(current.size());
    for (const auto& part : current) out.emplace_back(static_cast<int>(arr.size()), part.bits);
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<std::size_t> RegionGraph::find(const SignVector& r) const {
    auto it = lookup.find(r);
    if (it == lookup.end()) return std::nullopt;
    return it->second;
}

std::size_t RegionGraph::index_of(const SignVector& r) const {
    auto idx = find(r);
    if (!idx) throw InputError("sign vector " + r.str() + " is not a region");
    return *idx;
}

int RegionGraph::crossing(std::size_t a, std::size_t b) const {
    std::uint64_t diff = regions[a].bits() ^ regions[b].bits();
    if (std::popcount(diff) != 1) return -1;
    return std::countr_zero(diff);
}

RegionGraph region_graph_from(std::vector<SignVector> regions) {
    std::sort(regions.begin(), regions.end());
    regions.erase(std::unique(regions.begin(), regions.end()), regions.end());
    RegionGraph rg;
    rg.regions = std::move(regions);
    rg.graph = UndirectedGraph(rg.regions.size());
    for (std::size_t i = 0; i < rg.regions.size(); ++i) rg.lookup.emplace(rg.regions[i], i);
    for (std::size_t i = 0; i < rg.regions.size(); ++i) {
        const SignVector& r = rg.regions[i];
        for (int h = 0; h < r.size(); ++h) {
            auto it = rg.lookup.find(r.flipped(h));
            if (it != rg.lookup.end() && it->second > i) rg.graph.add_edge(i, it->second);
        }
    }
    rg.graph.finalize();
    return rg;
}

RegionGraph build_region_graph(const HyperplaneArrangement& arr) { return region_graph_from(enumerate_regions(arr)); }

std::optional<std::string> region_graph_problem(const RegionGraph& rg) {
    if (rg.size() % 2 != 0) return "odd number of regions";
    if (!is_connected(rg.graph)) return "region graph is disconnected";
    for (auto [a, b] : rg.graph.edges())
        if ((rg.regions[a].minus_count() + rg.regions[b].minus_count()) % 2 == 0)
            return "edge joins regions of equal sign parity";
    return std::nullopt;
}

SignVector opposite_region(const SignVector& r) { return r.opposite(); }

namespace {

bool split_holds(const HyperplaneArrangement& arr, const IndexSet& h0, const IndexSet& h1) {
    IndexSet all = h0;
    all.insert(all.end(), h1.begin(), h1.end());
    if (rank_of(arr, h0) != rank_of(arr, all) - 1) return false;
    for (std::size_t a = 0; a < h1.size(); ++a) {
        for (std::size_t b = a + 1; b < h1.size(); ++b) {
            IndexSet pair{h1[a], h1[b]};
            bool witnessed = std::any_of(h0.begin(), h0.end(), [&](std::size_t g) { return in_span(arr, g, pair); });
            if (!witnessed) return false;
        }
    }
    return true;
}

}  // namespace

bool check_supersolvable_split(const HyperplaneArrangement& arr, const IndexSet& h0, const IndexSet& h1) {
    std::vector<int> count(arr.size(), 0);
    for (std::size_t i : h0) {
        if (i >= arr.size()) throw InputError("split index out of range");
        ++count[i];
    }
    for (std::size_t i : h1) {
        if (i >= arr.size()) throw InputError("split index out of range");
        ++count[i];
    }
    if (std::any_of(count.begin(), count.end(), [](int c) { return c != 1; }))
        throw InputError("h0 and h1 must partition the hyperplanes");
    return split_holds(arr, h0, h1);
}

std::vector<std::uint64_t> chain_masks(const SupersolvableChain& chain) {
    std::vector<std::uint64_t> masks;
    for (const auto& level : chain.levels) masks.push_back(mask_of(level));
    return masks;
}

bool validate_chain(const HyperplaneArrangement& arr, const SupersolvableChain& chain) {
    if (chain.levels.empty()) throw InputError("a chain needs at least one level");
    auto masks = chain_masks(chain);
    for (std::size_t j = 0; j < chain.levels.size(); ++j) {
        if (std::popcount(masks[j]) != static_cast<int>(chain.levels[j].size()))
            throw InputError("chain level repeats an index");
        if (j > 0 && ((masks[j - 1] & ~masks[j]) != 0 || masks[j - 1] == masks[j]))
            throw InputError("chain levels must be strictly nested");
    }
    if (masks.back() != full_mask(static_cast<int>(arr.size())))
        throw InputError("the top chain level must contain every hyperplane");
    if (rank_of(arr, chain.levels.front()) > 2) return false;
    for (std::size_t j = 1; j < masks.size(); ++j) {
        if (!split_holds(arr, indices_of(masks[j - 1]), indices_of(masks[j] & ~masks[j - 1]))) return false;
    }
    return true;
}

namespace {

std::optional<std::vector<std::uint64_t>> chain_below(const HyperplaneArrangement& arr, std::uint64_t mask) {
    IndexSet s = indices_of(mask);
    int r = rank_of(arr, s);
    if (r <= 2) return std::vector<std::uint64_t>{mask};
    std::set<std::uint64_t> tried;
    const std::size_t k = static_cast<std::size_t>(r - 1);
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    while (true) {
        IndexSet t;
        for (std::size_t i : pick) t.push_back(s[i]);
        if (rank_of(arr, t) == r - 1) {
            IndexSet h0, h1;
            for (std::size_t g : s) (in_span(arr, g, t) ? h0 : h1).push_back(g);
            std::uint64_t m0 = mask_of(h0);
            if (tried.insert(m0).second && split_holds(arr, h0, h1)) {
                if (auto below = chain_below(arr, m0)) {
                    below->push_back(mask);
                    return below;
                }
            }
        }
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == s.size() - k + (i - 1)) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return std::nullopt;
}

}  // namespace

std::optional<SupersolvableChain> find_supersolvable_chain(const HyperplaneArrangement& arr) {
    auto masks = chain_below(arr, full_mask(static_cast<int>(arr.size())));
    if (!masks) return std::nullopt;
    SupersolvableChain chain;
    for (auto m : *masks) chain.levels.push_back(indices_of(m));
    return chain;
}

FiberPartition fiber_partition(const RegionGraph& rg, const IndexSet& h0, const IndexSet& h1) {
    FiberPartition fp;
    fp.h0_mask = mask_of(h0);
    fp.h1_mask = mask_of(h1);
    if (rg.size() == 0) return fp;
    const int m = rg.regions.front().size();
    if ((fp.h0_mask & fp.h1_mask) != 0 || (fp.h0_mask | fp.h1_mask) != full_mask(m))
        throw InputError("h0 and h1 must partition the hyperplanes");

    std::map<SignVector, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < rg.size(); ++i) groups[rg.regions[i].masked(fp.h0_mask)].push_back(i);

    fp.fiber_of.assign(rg.size(), 0);
    for (auto& [proj, members] : groups) {
        for (std::size_t v : members) fp.fiber_of[v] = fp.projections.size();
        fp.projections.push_back(proj);
    }
    const std::size_t length = h1.size() + 1;
    std::uint64_t sigma = 0;
    for (std::size_t f = 0; f < fp.projections.size(); ++f) {
        const auto& members = groups[fp.projections[f]];
        if (members.size() != length)
            throw StructuralViolation("fiber over " + fp.projections[f].str() + " has " +
                                      std::to_string(members.size()) + " regions instead of " + std::to_string(length));
        std::vector<std::size_t> ends;
        for (std::size_t v : members) {
            std::size_t deg = 0;
            for (std::size_t w : rg.graph.neighbors(v))
                if (fp.fiber_of[w] == f) ++deg;
            if (deg > 2 || (deg == 0 && length > 1))
                throw StructuralViolation("fiber over " + fp.projections[f].str() + " is not a path");
            if (deg <= 1) ends.push_back(v);
        }
        if ((length == 1 && ends.size() != 1) || (length > 1 && ends.size() != 2))
            throw StructuralViolation("fiber over " + fp.projections[f].str() + " is not a path");

        std::size_t start = ends.front();
        if (f == 0) {
            if (ends.size() == 2 && rg.regions[ends[1]] < rg.regions[ends[0]]) start = ends[1];
            sigma = rg.regions[start].bits() & fp.h1_mask;
        } else {
            auto it = std::find_if(ends.begin(), ends.end(),
                                   [&](std::size_t v) { return (rg.regions[v].bits() & fp.h1_mask) == sigma; });
            if (it == ends.end())
                throw StructuralViolation("fiber over " + fp.projections[f].str() + " is not aligned with the others");
            start = *it;
        }
        std::vector<std::size_t> path{start};
        std::size_t prev = start;
        std::size_t cur = start;
        while (path.size() < length) {
            std::size_t step = cur;
            for (std::size_t w : rg.graph.neighbors(cur))
                if (fp.fiber_of[w] == f && w != prev) step = w;
            if (step == cur) throw StructuralViolation("fiber over " + fp.projections[f].str() + " is not a path");
            prev = cur;
            cur = step;
            path.push_back(cur);
        }
        fp.paths.push_back(std::move(path));
    }
    return fp;
}

std::optional<std::string> suspension_problem(const RegionGraph& rg, const FiberPartition& fp) {
    std::vector<std::size_t> offset(rg.size(), 0);
    for (const auto& path : fp.paths)
        for (std::size_t i = 0; i < path.size(); ++i) offset[path[i]] = i;
    for (auto [a, b] : rg.graph.edges()) {
        std::size_t fa = fp.fiber_of[a], fb = fp.fiber_of[b];
        if (fa == fb) continue;
        if (hamming(fp.projections[fa], fp.projections[fb]) != 1)
            return "edge between non-adjacent fibers " + fp.projections[fa].str() + " and " + fp.projections[fb].str();
        if (offset[a] != offset[b]) return "cross edge between unequal offsets at " + rg.regions[a].str();
    }
    std::map<SignVector, std::size_t> by_projection;
    for (std::size_t f = 0; f < fp.projections.size(); ++f) by_projection[fp.projections[f]] = f;
    for (std::size_t f = 0; f < fp.projections.size(); ++f) {
        for (std::size_t h : indices_of(fp.h0_mask)) {
            auto it = by_projection.find(fp.projections[f].flipped(static_cast<int>(h)));
            if (it == by_projection.end()) continue;
            const auto& p = fp.paths[f];
            const auto& q = fp.paths[it->second];
            if (!rg.graph.adjacent(p.front(), q.front()) || !rg.graph.adjacent(p.back(), q.back()))
                return "adjacent fibers not joined at both ends near " + fp.projections[f].str();
        }
    }
    return std::nullopt;
}

std::vector<ChainLevel> chain_levels(const std::vector<SignVector>& regions, const std::vector<std::uint64_t>& masks) {
    std::vector<ChainLevel> levels;
    std::uint64_t prev = 0;
    for (std::uint64_t mask : masks) {
        ChainLevel lv;
        lv.mask = mask;
        lv.new_mask = mask & ~prev;
        prev = mask;
        for (const auto& r : regions) lv.regions.push_back(r.masked(mask));
        std::sort(lv.regions.begin(), lv.regions.end());
        lv.regions.erase(std::unique(lv.regions.begin(), lv.regions.end()), lv.regions.end());
        for (std::size_t i = 0; i < lv.regions.size(); ++i) lv.index.emplace(lv.regions[i], i);
        levels.push_back(std::move(lv));
    }
    return levels;
}

bool is_canonical_base(const std::vector<ChainLevel>& levels, const SignVector& r) {
    for (std::size_t j = 1; j < levels.size(); ++j) {
        SignVector rj = r.masked(levels[j].mask);
        int inside = 0;
        for (std::size_t h : indices_of(levels[j].new_mask))
            if (levels[j].contains(rj.flipped(static_cast<int>(h)))) ++inside;
        if (inside > 1) return false;
    }
    return true;
}

std::vector<SignVector> canonical_base_regions(const RegionGraph& rg, const SupersolvableChain& chain) {
    auto levels = chain_levels(rg.regions, chain_masks(chain));
    std::vector<SignVector> out;
    for (const auto& r : rg.regions)
        if (is_canonical_base(levels, r)) out.push_back(r);
    return out;
}

std::vector<SignVector> canonical_base_regions(const HyperplaneArrangement& arr, const SupersolvableChain& chain) {
    if (!validate_chain(arr, chain)) throw InputError("chain is not a supersolvable chain");
    return canonical_base_regions(build_region_graph(arr), chain);
}

}  // namespace regiongray
