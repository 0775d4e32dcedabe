#include "regiongray/triangulation.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "regiongray/errors.hpp"
#include "regiongray/lattice.hpp"

namespace regiongray {

int polygon_size(int n) { return 2 * n + 2; }

int antipode(int n, int position) { return (position + n + 1) % polygon_size(n); }

int value_position(int n, int value) { return value >= 0 ? value : n + 1 - value; }

int position_value(int n, int position) { return position <= n ? position : -(position - n - 1); }

namespace {

using Line = std::pair<int, int>;

Line normalized(int a, int b) { return a < b ? Line{a, b} : Line{b, a}; }

bool is_side(int n, int a, int b) {
    int d = std::abs(a - b);
    return d == 1 || d == polygon_size(n) - 1;
}

bool crosses(Line x, Line y) {
    auto [a, b] = x;
    auto [c, d] = y;
    return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

Line mirror(int n, Line d) { return normalized(antipode(n, d.first), antipode(n, d.second)); }

class LineSet {
public:
    explicit LineSet(const SymmetricTriangulation& t) : n_(t.n), size_(polygon_size(t.n)), present_(size_ * size_, 0) {
        for (auto [a, b] : t.diagonals) {
            present_[static_cast<std::size_t>(a * size_ + b)] = 1;
            present_[static_cast<std::size_t>(b * size_ + a)] = 1;
        }
    }
    bool has(int a, int b) const {
        return is_side(n_, a, b) || present_[static_cast<std::size_t>(a * size_ + b)] != 0;
    }

private:
    int n_;
    int size_;
    std::vector<char> present_;
};

void add_diagonal(int n, std::set<Line>& out, int a, int b) {
    if (a != b && !is_side(n, a, b)) out.insert(normalized(a, b));
}

}  // namespace

std::string triangulation_problem(const SymmetricTriangulation& t) {
    const int size = polygon_size(t.n);
    if (t.n < 1) return "n must be positive";
    if (static_cast<int>(t.diagonals.size()) != size - 3)
        return "expected " + std::to_string(size - 3) + " diagonals, got " + std::to_string(t.diagonals.size());
    std::set<Line> seen;
    for (auto [a, b] : t.diagonals) {
        if (a < 0 || b >= size || a >= b) return "diagonal out of range or not normalized";
        if (is_side(t.n, a, b)) return "polygon side listed as a diagonal";
        if (!seen.insert({a, b}).second) return "repeated diagonal";
    }
    for (std::size_t i = 0; i < t.diagonals.size(); ++i)
        for (std::size_t j = i + 1; j < t.diagonals.size(); ++j)
            if (crosses(t.diagonals[i], t.diagonals[j])) return "crossing diagonals";
    for (auto d : t.diagonals)
        if (!seen.count(mirror(t.n, d))) return "not point-symmetric";
    return {};
}

SymmetricTriangulation make_triangulation(int n, std::vector<std::pair<int, int>> diagonals) {
    SymmetricTriangulation t{n, {}};
    for (auto [a, b] : diagonals) t.diagonals.push_back(normalized(a, b));
    std::sort(t.diagonals.begin(), t.diagonals.end());
    if (auto problem = triangulation_problem(t); !problem.empty()) throw InputError("invalid symmetric triangulation: " + problem);
    return t;
}

bool is_2bar31_avoiding(const FullNotation& f) {
    for (std::size_t j = 0; j < f.size(); ++j) {
        const int b = f[j];
        if (b <= 0) continue;
        bool seen_larger = false;
        for (std::size_t k = j + 1; k < f.size(); ++k) {
            if (f[k] > b)
                seen_larger = true;
            else if (seen_larger)
                return false;
        }
    }
    return true;
}

Decomposition split_full_notation(const FullNotation& f) {
    const int n = static_cast<int>(f.size() / 2);
    Decomposition d;
    for (int i = n; i >= 1; --i) {
        if (f[static_cast<std::size_t>(n + i - 1)] < 0) {
            d.boundary = i;
            break;
        }
    }
    const auto lo = static_cast<std::size_t>(n - d.boundary), hi = static_cast<std::size_t>(n + d.boundary);
    d.sigma_L.assign(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(lo));
    d.tau.assign(f.begin() + static_cast<std::ptrdiff_t>(lo), f.begin() + static_cast<std::ptrdiff_t>(hi));
    d.sigma_R.assign(f.begin() + static_cast<std::ptrdiff_t>(hi), f.end());
    for (int v : d.tau)
        if (v > 0) d.y.push_back(v);
    std::sort(d.y.begin(), d.y.end());
    std::vector<int> bounds{0};
    bounds.insert(bounds.end(), d.y.begin(), d.y.end());
    bounds.push_back(n + 1);
    for (std::size_t k = 0; k + 1 < bounds.size(); ++k) {
        std::vector<int> block;
        for (int v : d.sigma_R)
            if (bounds[k] < v && v < bounds[k + 1]) block.push_back(v);
        if (!block.empty()) d.pockets.push_back(std::move(block));
    }
    return d;
}

namespace {

bool avoids_231(const std::vector<int>& s) {
    for (std::size_t j = 0; j < s.size(); ++j) {
        bool seen_larger = false;
        for (std::size_t k = j + 1; k < s.size(); ++k) {
            if (s[k] > s[j])
                seen_larger = true;
            else if (seen_larger)
                return false;
        }
    }
    return true;
}

}  // namespace

bool avoids_by_decomposition(const FullNotation& f) {
    auto d = split_full_notation(f);
    int last = 0;
    bool first = true;
    for (int v : d.tau) {
        if (v <= 0) continue;
        if (!first && v > last) return false;
        last = v;
        first = false;
    }
    if (!avoids_231(d.sigma_R)) return false;
    for (int x : d.tau) {
        if (x <= 0) continue;
        bool seen_larger = false;
        for (int v : d.sigma_R) {
            if (v > x)
                seen_larger = true;
            else if (seen_larger)
                return false;
        }
    }
    return true;
}

std::vector<FullNotation> avoiding_signed_permutations(int n) {
    std::vector<FullNotation> out;
    for (const auto& w : all_signed_permutations(n)) {
        auto f = to_full(w);
        if (is_2bar31_avoiding(f)) out.push_back(std::move(f));
    }
    return out;
}

Decomposition decompose(const FullNotation& f) {
    if (!is_2bar31_avoiding(f)) throw InputError("signed permutation contains a 2bar31 pattern");
    return split_full_notation(f);
}

std::vector<int> type_a_traversal(const SymmetricTriangulation& t, int lo, int hi) {
    LineSet lines(t);
    std::vector<int> out;
    auto rec = [&](auto&& self, int a, int b) -> void {
        if (b - a < 2) return;
        for (int c = a + 1; c < b; ++c) {
            if (lines.has(a, c) && lines.has(c, b)) {
                out.push_back(position_value(t.n, c));
                self(self, a, c);
                self(self, c, b);
                return;
            }
        }
        throw StructuralViolation("no triangle on the entering line");
    };
    rec(rec, lo, hi);
    return out;
}

FullNotation pi_map(const SymmetricTriangulation& t) {
    if (auto problem = triangulation_problem(t); !problem.empty()) throw InputError("invalid symmetric triangulation: " + problem);
    const int n = t.n;
    const int zero_bar = n + 1;
    LineSet lines(t);
    std::vector<Line> lbar;
    std::vector<int> y;
    for (auto [a, b] : t.diagonals) {
        int va = position_value(n, a), vb = position_value(n, b);
        if ((va > 0 && vb < 0) || (va < 0 && vb > 0)) {
            lbar.emplace_back(a, b);
            y.push_back(std::max(va, vb));
        }
    }
    std::sort(y.begin(), y.end());
    y.erase(std::unique(y.begin(), y.end()), y.end());

    std::vector<int> tau;
    if (!lbar.empty()) {
        const Line start = normalized(zero_bar, value_position(n, -y.front()));
        lbar.push_back(start);
        lbar.push_back(normalized(0, y.front()));
        std::set<Line> visited{start};
        Line l = start;
        while (visited.size() < lbar.size()) {
            int found = 0;
            int pivot = 0, other = 0, target = 0;
            for (int side = 0; side < 2; ++side) {
                int v = side == 0 ? l.first : l.second;
                int v2 = side == 0 ? l.second : l.first;
                for (auto cand : lbar) {
                    if (visited.count(cand) || (cand.first != v && cand.second != v)) continue;
                    int u = cand.first == v ? cand.second : cand.first;
                    if (lines.has(u, v2)) {
                        ++found;
                        pivot = v;
                        other = v2;
                        target = u;
                    }
                }
            }
            if (found != 1) throw StructuralViolation("pivoting walk through the crossing lines is not unique");
            tau.push_back(position_value(n, pivot) < 0 ? position_value(n, target) : position_value(n, other));
            l = normalized(pivot, target);
            visited.insert(l);
        }
    }

    std::vector<int> bounds{0};
    bounds.insert(bounds.end(), y.begin(), y.end());
    bounds.push_back(zero_bar);
    std::vector<int> sigma_r;
    for (std::size_t k = 0; k + 1 < bounds.size(); ++k) {
        auto part = type_a_traversal(t, bounds[k], bounds[k + 1]);
        sigma_r.insert(sigma_r.end(), part.begin(), part.end());
    }
    FullNotation f;
    for (auto it = sigma_r.rbegin(); it != sigma_r.rend(); ++it) f.push_back(-*it);
    f.insert(f.end(), tau.begin(), tau.end());
    f.insert(f.end(), sigma_r.begin(), sigma_r.end());
    if (static_cast<int>(f.size()) != 2 * n) throw StructuralViolation("traversal did not list every symbol once");
    return f;
}

SymmetricTriangulation theta_map(const FullNotation& f) {
    auto d = decompose(f);
    const int n = static_cast<int>(f.size() / 2);
    const int zero_bar = n + 1;
    std::set<Line> out;
    if (!d.tau.empty()) {
        auto first_negative = std::find_if(d.tau.begin(), d.tau.end(), [](int v) { return v < 0; });
        int a = zero_bar, b = value_position(n, *first_negative);
        add_diagonal(n, out, a, b);
        for (std::size_t k = 0; k < d.tau.size(); ++k) {
            int x = d.tau[k];
            int neg_end = position_value(n, a) < 0 ? a : b;
            int pos_end = neg_end == a ? b : a;
            if (x > 0) {
                a = neg_end;
                b = value_position(n, x);
            } else {
                auto next = std::find_if(d.tau.begin() + static_cast<std::ptrdiff_t>(k) + 1, d.tau.end(),
                                         [](int v) { return v < 0; });
                a = pos_end;
                b = next == d.tau.end() ? 0 : value_position(n, *next);
            }
            add_diagonal(n, out, a, b);
        }
    }
    std::vector<int> bounds{0};
    bounds.insert(bounds.end(), d.y.begin(), d.y.end());
    bounds.push_back(zero_bar);
    for (std::size_t k = 0; k + 1 < bounds.size(); ++k) {
        add_diagonal(n, out, bounds[k], bounds[k + 1]);
        std::vector<int> block;
        for (int v : d.sigma_R)
            if (bounds[k] < v && v < bounds[k + 1]) block.push_back(v);
        auto rec = [&](auto&& self, int lo, int hi, std::vector<int> seq) -> void {
            if (seq.empty()) return;
            int c = seq.front();
            add_diagonal(n, out, lo, c);
            add_diagonal(n, out, c, hi);
            std::vector<int> left, right;
            for (std::size_t i = 1; i < seq.size(); ++i) (seq[i] < c ? left : right).push_back(seq[i]);
            self(self, lo, c, std::move(left));
            self(self, c, hi, std::move(right));
        };
        rec(rec, bounds[k], bounds[k + 1], std::move(block));
    }
    std::vector<Line> all(out.begin(), out.end());
    for (auto l : all) out.insert(mirror(n, l));
    SymmetricTriangulation t{n, std::vector<Line>(out.begin(), out.end())};
    if (auto problem = triangulation_problem(t); !problem.empty())
        throw StructuralViolation("reconstructed triangulation is invalid: " + problem);
    return t;
}

bool jump_step(FullNotation& f, int value, int direction) {
    auto it = std::find(f.begin(), f.end(), value);
    if (it == f.end()) return false;
    const auto p = static_cast<std::ptrdiff_t>(it - f.begin());
    const auto q = p + direction;
    const auto last = static_cast<std::ptrdiff_t>(f.size()) - 1;
    if (q < 0 || q > last || f[static_cast<std::size_t>(q)] >= value) return false;
    const bool middle = f[static_cast<std::size_t>(q)] == -value;
    std::swap(f[static_cast<std::size_t>(p)], f[static_cast<std::size_t>(q)]);
    if (!middle) std::swap(f[static_cast<std::size_t>(last - p)], f[static_cast<std::size_t>(last - q)]);
    return true;
}

namespace {

std::size_t position_in(const FullNotation& f, int value) {
    return static_cast<std::size_t>(std::find(f.begin(), f.end(), value) - f.begin());
}

}  // namespace

std::vector<Jump> minimal_jumps(const FullNotation& f) {
    auto d = decompose(f);
    const int n = static_cast<int>(f.size() / 2);
    const std::size_t tau_lo = static_cast<std::size_t>(n - d.boundary);
    const std::size_t tau_hi = static_cast<std::size_t>(n + d.boundary);
    std::vector<Jump> out;
    auto record = [&](int v, int dir, int dist, FullNotation g) {
        if (!is_2bar31_avoiding(g)) throw StructuralViolation("a minimal jump produced a 2bar31 pattern");
        out.push_back({v, dir, dist, std::move(g)});
    };
    auto single = [&](int v, int dir) {
        FullNotation g = f;
        if (jump_step(g, v, dir)) record(v, dir, 1, std::move(g));
    };

    for (int v = 1; v <= n; ++v) {
        const std::size_t p = position_in(f, v);
        if (p >= tau_lo && p < tau_hi) {
            if (p > tau_lo && f[p - 1] < 0) single(v, -1);
            if (p + 1 < f.size() && f[p + 1] < 0) single(v, +1);
            if (p + 1 < f.size() && f[p + 1] > 0) {
                const int bound = f[p + 1];
                FullNotation g = f;
                int dist = 0;
                auto smaller_to_right = [&] {
                    for (std::size_t k = position_in(g, v) + 1; k < g.size(); ++k)
                        if (g[k] < bound) return true;
                    return false;
                };
                bool ok = true;
                while (smaller_to_right()) {
                    if (!jump_step(g, v, +1)) {
                        ok = false;
                        break;
                    }
                    ++dist;
                }
                if (!ok) throw StructuralViolation("jump out of the central block is blocked");
                record(v, +1, dist, std::move(g));
            }
            continue;
        }
        // v lies in sigma_R; its pocket is the maximal block of values between consecutive
        // elements of y.
        auto above = std::upper_bound(d.y.begin(), d.y.end(), v);
        const int lo_value = above == d.y.begin() ? 0 : *(above - 1);
        const int hi_value = above == d.y.end() ? n + 1 : *above;
        std::size_t start = tau_hi;
        while (start < f.size() && !(lo_value < f[start] && f[start] < hi_value)) ++start;
        std::size_t end = start;
        while (end < f.size() && lo_value < f[end] && f[end] < hi_value) ++end;

        for (int dir : {-1, +1}) {
            FullNotation g = f;
            for (int dist = 1;; ++dist) {
                const std::size_t q = position_in(g, v);
                const std::size_t next = dir < 0 ? q - 1 : q + 1;
                if ((dir < 0 && q == start) || next >= end || !jump_step(g, v, dir)) break;
                if (is_2bar31_avoiding(g)) {
                    record(v, dir, dist, std::move(g));
                    break;
                }
            }
        }
        if (p == start) {
            int target = 0;
            for (int t : d.tau)
                if (t > 0 && t < v) target = std::max(target, t);
            FullNotation g = f;
            int dist = 0;
            bool ok = true;
            if (target == 0) {
                ok = jump_step(g, v, -1);
                dist = 1;
            } else {
                while (g[position_in(g, v) + 1] != target) {
                    if (!jump_step(g, v, -1)) {
                        ok = false;
                        break;
                    }
                    ++dist;
                }
            }
            if (!ok) throw StructuralViolation("jump into the central block is blocked");
            record(v, -1, dist, std::move(g));
        }
    }
    std::sort(out.begin(), out.end(), [](const Jump& a, const Jump& b) {
        return std::pair(a.value, a.direction) < std::pair(b.value, b.direction);
    });
    return out;
}

std::vector<Jump> minimal_jumps_brute_force(const FullNotation& f) {
    const int n = static_cast<int>(f.size() / 2);
    std::vector<Jump> out;
    for (int v = 1; v <= n; ++v) {
        for (int dir : {-1, +1}) {
            FullNotation g = f;
            for (int dist = 1; jump_step(g, v, dir); ++dist) {
                if (is_2bar31_avoiding(g)) {
                    out.push_back({v, dir, dist, g});
                    break;
                }
            }
        }
    }
    return out;
}

SymmetricTriangulation apply_flip(const SymmetricTriangulation& t, std::pair<int, int> diagonal) {
    const int n = t.n;
    const Line d = normalized(diagonal.first, diagonal.second);
    if (!std::binary_search(t.diagonals.begin(), t.diagonals.end(), d))
        throw InputError("not a diagonal of the triangulation: " + vertex_token(n, d.first) + "-" + vertex_token(n, d.second));
    LineSet lines(t);
    auto flipped = [&](Line x) {
        int inside = -1, outside = -1;
        for (int c = 0; c < polygon_size(n); ++c) {
            if (c == x.first || c == x.second || !lines.has(x.first, c) || !lines.has(c, x.second)) continue;
            (x.first < c && c < x.second ? inside : outside) = c;
        }
        if (inside < 0 || outside < 0) throw StructuralViolation("diagonal is not shared by two triangles");
        return normalized(inside, outside);
    };
    std::set<Line> out(t.diagonals.begin(), t.diagonals.end());
    const Line m = mirror(n, d);
    const Line nd = flipped(d);
    out.erase(d);
    out.insert(nd);
    if (m != d) {
        out.erase(m);
        out.insert(mirror(n, nd));
    }
    return SymmetricTriangulation{n, std::vector<Line>(out.begin(), out.end())};
}

std::vector<SymmetricTriangulation> flip_neighbors(const SymmetricTriangulation& t) {
    std::set<SymmetricTriangulation> out;
    for (auto d : t.diagonals)
        if (d <= mirror(t.n, d)) out.insert(apply_flip(t, d));
    return {out.begin(), out.end()};
}

bool differ_by_flip(const SymmetricTriangulation& a, const SymmetricTriangulation& b) {
    if (a.n != b.n) return false;
    for (const auto& x : flip_neighbors(a))
        if (x == b) return true;
    return false;
}

std::vector<SymmetricTriangulation> enumerate_symmetric_triangulations(int n) {
    if (n < 1 || n > 6) throw InputError("triangulation enumeration supports 1 <= n <= 6");
    const int size = polygon_size(n);
    std::map<Line, std::vector<std::vector<Line>>> memo;
    auto rec = [&](auto&& self, int lo, int hi) -> const std::vector<std::vector<Line>>& {
        auto key = Line{lo, hi};
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        std::vector<std::vector<Line>> result;
        if (hi - lo < 2) {
            result.emplace_back();
        } else {
            for (int c = lo + 1; c < hi; ++c) {
                const auto& left = self(self, lo, c);
                const auto& right = self(self, c, hi);
                for (const auto& l : left) {
                    for (const auto& r : right) {
                        std::vector<Line> tri = l;
                        tri.insert(tri.end(), r.begin(), r.end());
                        if (c - lo > 1) tri.emplace_back(lo, c);
                        if (hi - c > 1) tri.emplace_back(c, hi);
                        result.push_back(std::move(tri));
                    }
                }
            }
        }
        return memo.emplace(key, std::move(result)).first->second;
    };
    std::vector<SymmetricTriangulation> out;
    for (auto tri : rec(rec, 0, size - 1)) {
        std::sort(tri.begin(), tri.end());
        bool symmetric = std::all_of(tri.begin(), tri.end(), [&](Line d) {
            return std::binary_search(tri.begin(), tri.end(), mirror(n, d));
        });
        if (symmetric) out.push_back({n, std::move(tri)});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t FlipGraph::index_of(const SymmetricTriangulation& t) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), t);
    if (it == vertices.end() || *it != t) throw StructuralViolation("triangulation missing from the flip graph");
    return static_cast<std::size_t>(it - vertices.begin());
}

FlipGraph flip_graph(int n) {
    FlipGraph g{enumerate_symmetric_triangulations(n), {}};
    g.graph = UndirectedGraph(g.vertices.size());
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        for (const auto& nb : flip_neighbors(g.vertices[i])) g.graph.add_edge(i, g.index_of(nb));
    g.graph.finalize();
    return g;
}

bool verify_flip_jump(int n) {
    auto fg = flip_graph(n);
    auto avoiders = avoiding_signed_permutations(n);
    std::map<FullNotation, std::size_t> index;
    for (std::size_t i = 0; i < fg.vertices.size(); ++i) {
        auto f = pi_map(fg.vertices[i]);
        if (!index.emplace(f, i).second) return false;
        if (theta_map(f) != fg.vertices[i]) return false;
    }
    if (index.size() != avoiders.size()) return false;
    for (const auto& f : avoiders)
        if (!index.count(f)) return false;
    for (const auto& [f, i] : index) {
        std::set<std::size_t> jumps;
        for (const auto& j : minimal_jumps(f)) jumps.insert(index.at(j.result));
        std::set<std::size_t> flips(fg.graph.neighbors(i).begin(), fg.graph.neighbors(i).end());
        if (jumps != flips) return false;
    }
    return true;
}

TriangulationListing triangulation_gray_code(int n) {
    if (n < 1) throw InputError("n must be positive");
    auto fam = type_b_arrangement(n);
    auto rg = build_region_graph(fam.arrangement);
    SignedPermutation id;
    for (int v = 1; v <= n; ++v) id.push_back(v);
    const SignVector base = signed_permutation_to_region(id);
    auto lattice = make_lattice(poset_of_regions(rg, rg.index_of(base)));
    std::vector<ElementPair> generators;
    for (const auto& [a, b] : typeb_sylvester_generators(n))
        generators.emplace_back(rg.index_of(signed_permutation_to_region(a)), rg.index_of(signed_permutation_to_region(b)));
    auto cong = congruence_closure(lattice, generators);
    auto listing = ham_path_quotient(rg, fam.chain, base, cong);
    auto bottoms = class_bottoms(lattice, cong);

    TriangulationListing out;
    for (std::size_t cls : listing.order) {
        auto f = to_full(region_to_signed_permutation(rg.regions[bottoms[cls]], n));
        out.triangulations.push_back(theta_map(f));
        out.permutations.push_back(std::move(f));
    }
    out.cyclic = out.triangulations.size() > 1 && differ_by_flip(out.triangulations.front(), out.triangulations.back());
    return out;
}

std::string vertex_token(int n, int position) {
    return position <= n ? std::to_string(position) : "~" + std::to_string(position - n - 1);
}

std::string format_triangulation(const SymmetricTriangulation& t) {
    std::string s;
    for (auto [a, b] : t.diagonals) {
        if (!s.empty()) s += ';';
        s += vertex_token(t.n, a) + "-" + vertex_token(t.n, b);
    }
    return s;
}

SymmetricTriangulation parse_triangulation(int n, std::string_view text) {
    auto vertex = [&](std::string_view tok) {
        bool bar = !tok.empty() && tok.front() == '~';
        if (bar) tok.remove_prefix(1);
        if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw InputError("bad vertex token");
        int k = std::stoi(std::string(tok));
        if (k > n) throw InputError("vertex out of range");
        return bar ? n + 1 + k : k;
    };
    std::vector<std::pair<int, int>> diagonals;
    std::size_t i = 0;
    while (i < text.size()) {
        std::size_t j = text.find(';', i);
        if (j == std::string_view::npos) j = text.size();
        auto item = text.substr(i, j - i);
        auto dash = item.find('-');
        if (dash == std::string_view::npos) throw InputError("diagonal needs the form a-b");
        diagonals.emplace_back(vertex(item.substr(0, dash)), vertex(item.substr(dash + 1)));
        i = j + 1;
    }
    return make_triangulation(n, std::move(diagonals));
}

}  // namespace regiongray
