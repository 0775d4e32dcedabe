#include "regiongray/graphic.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "regiongray/errors.hpp"

namespace regiongray {

SignedGraph::SignedGraph(int n, const std::vector<std::pair<int, int>>& pos_edges,
                         const std::vector<std::pair<int, int>>& neg_edges)
    : n_(n) {
    if (n < 1) throw InputError("a graph needs at least one vertex");
    std::set<std::pair<int, int>> seen;
    auto add = [&](std::pair<int, int> e, bool negative) {
        auto [a, b] = e;
        if (a < 1 || b < 1 || a > n || b > n) throw InputError("edge endpoint out of range");
        if (a == b) throw InputError("loops are not supported");
        SignedEdge se{std::min(a, b), std::max(a, b), negative};
        if (!seen.insert({se.low, se.high}).second)
            throw InputError("parallel edge " + std::to_string(se.low) + "-" + std::to_string(se.high));
        edges_.push_back(se);
    };
    for (auto e : pos_edges) add(e, false);
    for (auto e : neg_edges) add(e, true);
    std::sort(edges_.begin(), edges_.end(), [](const SignedEdge& x, const SignedEdge& y) {
        return std::pair(x.high, x.low) < std::pair(y.high, y.low);
    });
    if (edges_.size() > static_cast<std::size_t>(SignVector::max_size))
        throw InputError("at most 64 edges are supported");
}

bool SignedGraph::is_signed() const {
    return std::any_of(edges_.begin(), edges_.end(), [](const SignedEdge& e) { return e.negative; });
}

std::optional<std::size_t> SignedGraph::edge_between(int u, int v) const {
    int lo = std::min(u, v), hi = std::max(u, v);
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (edges_[i].low == lo && edges_[i].high == hi) return i;
    return std::nullopt;
}

SignedGraph SignedGraph::complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i) e.emplace_back(i, j);
    return SignedGraph(n, e);
}

SignedGraph SignedGraph::path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
    return SignedGraph(n, e);
}

SignedGraph SignedGraph::cycle(int n) {
    if (n < 3) throw InputError("a cycle needs at least three vertices");
    auto e = path(n).edges();
    std::vector<std::pair<int, int>> pairs;
    for (const auto& x : e) pairs.emplace_back(x.low, x.high);
    pairs.emplace_back(1, n);
    return SignedGraph(n, pairs);
}

namespace {

struct Neighbor {
    int vertex;
    bool negative;
};

std::vector<Neighbor> live_neighbors(const SignedGraph& g, int v, const std::vector<char>& removed) {
    std::vector<Neighbor> out;
    for (const auto& e : g.edges()) {
        int other = e.low == v ? e.high : (e.high == v ? e.low : 0);
        if (other != 0 && !removed[static_cast<std::size_t>(other)]) out.push_back({other, e.negative});
    }
    return out;
}

bool is_simplicial(const SignedGraph& g, int v, const std::vector<char>& removed) {
    auto nb = live_neighbors(g, v, removed);
    for (std::size_t a = 0; a < nb.size(); ++a)
        for (std::size_t b = a + 1; b < nb.size(); ++b)
            if (!g.edge_between(nb[a].vertex, nb[b].vertex)) return false;
    return true;
}

template <class Pred>
EliminationResult eliminate(const SignedGraph& g, Pred simplicial) {
    const int n = g.vertex_count();
    std::vector<char> removed(static_cast<std::size_t>(n + 1), 0);
    EliminationResult res;
    for (int step = 0; step < n; ++step) {
        int pick = 0;
        for (int v = 1; v <= n && pick == 0; ++v)
            if (!removed[static_cast<std::size_t>(v)] && simplicial(g, v, removed)) pick = v;
        if (pick == 0) {
            for (int v = 1; v <= n; ++v)
                if (!removed[static_cast<std::size_t>(v)]) res.stuck.push_back(v);
            return res;
        }
        removed[static_cast<std::size_t>(pick)] = 1;
        res.order.push_back(pick);
    }
    return res;
}

}  // namespace

bool is_signed_simplicial(const SignedGraph& g, int v, const std::vector<char>& removed) {
    auto nb = live_neighbors(g, v, removed);
    for (std::size_t a = 0; a < nb.size(); ++a) {
        for (std::size_t b = a + 1; b < nb.size(); ++b) {
            auto idx = g.edge_between(nb[a].vertex, nb[b].vertex);
            if (!idx) return false;
            bool need_negative = nb[a].negative != nb[b].negative;
            if (g.edges()[*idx].negative != need_negative) return false;
        }
    }
    return true;
}

EliminationResult find_peo(const SignedGraph& g) { return eliminate(g, is_simplicial); }

EliminationResult find_signed_peo(const SignedGraph& g) { return eliminate(g, is_signed_simplicial); }

HyperplaneArrangement graph_hyperplanes(const SignedGraph& g) {
    if (g.edge_count() == 0) throw InputError("the graph has no edges, so its arrangement is empty");
    std::vector<std::vector<long long>> normals;
    for (const auto& e : g.edges()) {
        std::vector<long long> v(static_cast<std::size_t>(g.vertex_count()), 0);
        v[static_cast<std::size_t>(e.low - 1)] = 1;
        v[static_cast<std::size_t>(e.high - 1)] = e.negative ? 1 : -1;
        normals.push_back(std::move(v));
    }
    return HyperplaneArrangement(g.vertex_count(), normals);
}

ArrangementFamily graph_arrangement(const SignedGraph& g) {
    auto peo = find_signed_peo(g);
    if (!peo.found())
        throw InputError("no signed perfect elimination ordering exists; only graphs with one are supported");
    auto arr = graph_hyperplanes(g);

    std::vector<char> removed(static_cast<std::size_t>(g.vertex_count() + 1), 0);
    std::vector<std::uint64_t> masks;  // top level first
    auto live_mask = [&] {
        std::uint64_t m = 0;
        for (std::size_t i = 0; i < g.edge_count(); ++i) {
            const auto& e = g.edges()[i];
            if (!removed[static_cast<std::size_t>(e.low)] && !removed[static_cast<std::size_t>(e.high)])
                m |= std::uint64_t{1} << i;
        }
        return m;
    };
    masks.push_back(live_mask());
    for (int v : peo.order) {
        if (rank_of(arr, indices_of(masks.back())) <= 2) break;
        removed[static_cast<std::size_t>(v)] = 1;
        std::uint64_t m = live_mask();
        if (m != masks.back() && m != 0) masks.push_back(m);
    }
    SupersolvableChain chain;
    for (auto it = masks.rbegin(); it != masks.rend(); ++it) chain.levels.push_back(indices_of(*it));
    if (!validate_chain(arr, chain))
        throw StructuralViolation("the chain read off the elimination ordering is not supersolvable");
    return {std::move(arr), std::move(chain)};
}

bool half_edge_into(const SignedEdge& e, bool into_low, int endpoint) {
    if (endpoint == e.low) return into_low;
    return e.negative ? into_low : !into_low;
}

SignedOrientation region_to_orientation(const SignedGraph& g, const SignVector& r) {
    if (r.size() != static_cast<int>(g.edge_count())) throw InputError("sign vector does not match the graph");
    SignedOrientation o;
    o.into_low.resize(g.edge_count());
    for (std::size_t i = 0; i < g.edge_count(); ++i) o.into_low[i] = !r.negative(static_cast<int>(i));
    return o;
}

SignVector orientation_to_region(const SignedGraph& g, const SignedOrientation& o) {
    if (o.into_low.size() != g.edge_count()) throw InputError("orientation does not match the graph");
    if (!is_acyclic_signed(g, o)) throw InputError("orientation contains a cycle");
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < g.edge_count(); ++i)
        if (!o.into_low[i]) bits |= std::uint64_t{1} << i;
    return SignVector(static_cast<int>(g.edge_count()), bits);
}

bool is_acyclic_signed(const SignedGraph& g, const SignedOrientation& o) {
    // States (vertex, whether the arriving half-edge points into it). Leaving v along e is
    // allowed when e's half-edge at v differs from the arriving one; a closed admissible
    // walk is exactly a directed cycle in this state graph.
    const int n = g.vertex_count();
    const std::size_t states = static_cast<std::size_t>(2 * (n + 1));
    std::vector<std::vector<std::size_t>> next(states);
    auto id = [](int v, bool in) { return static_cast<std::size_t>(2 * v + (in ? 1 : 0)); };
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const auto& e = g.edges()[i];
        for (int side = 0; side < 2; ++side) {
            int v = side == 0 ? e.low : e.high;
            int w = side == 0 ? e.high : e.low;
            bool at_v = half_edge_into(e, o.into_low[i], v);
            bool at_w = half_edge_into(e, o.into_low[i], w);
            next[id(v, !at_v)].push_back(id(w, at_w));
        }
    }
    std::vector<int> color(states, 0);
    for (std::size_t s = 0; s < states; ++s) {
        if (color[s] != 0) continue;
        std::vector<std::pair<std::size_t, std::size_t>> stack{{s, 0}};
        color[s] = 1;
        while (!stack.empty()) {
            auto& [u, k] = stack.back();
            if (k < next[u].size()) {
                std::size_t w = next[u][k++];
                if (color[w] == 1) return false;
                if (color[w] == 0) {
                    color[w] = 1;
                    stack.emplace_back(w, 0);
                }
            } else {
                color[u] = 2;
                stack.pop_back();
            }
        }
    }
    return true;
}

std::vector<SignedOrientation> brute_force_acyclic_orientations(const SignedGraph& g) {
    const std::size_t m = g.edge_count();
    if (m > 20) throw SizeGuardError("brute-force orientation search is limited to 20 edges");
    std::vector<SignedOrientation> out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
        SignedOrientation o;
        o.into_low.resize(m);
        for (std::size_t i = 0; i < m; ++i) o.into_low[i] = (bits >> i) & 1U;
        if (is_acyclic_signed(g, o)) out.push_back(std::move(o));
    }
    return out;
}

OrientationListing acyclic_orientation_gray_code(const SignedGraph& g) {
    auto fam = graph_arrangement(g);
    OrientationListing out{{}, build_region_graph(fam.arrangement), {}};
    if (rank(fam.arrangement) >= 2) {
        out.listing = ham_cycle_supersolvable(fam.arrangement, fam.chain);
    } else {
        out.listing = zigzag_cycle(out.regions, fam.chain, out.regions.regions.front());
    }
    for (std::size_t i : out.listing.order) out.orientations.push_back(region_to_orientation(g, out.regions.regions[i]));
    return out;
}

std::string format_orientation(const SignedGraph& g, const SignedOrientation& o) {
    std::string s;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const auto& e = g.edges()[i];
        if (i) s += ' ';
        s += std::to_string(e.low);
        bool in_low = half_edge_into(e, o.into_low[i], e.low);
        bool in_high = half_edge_into(e, o.into_low[i], e.high);
        if (in_low && in_high)
            s += "<->";
        else if (in_low)
            s += "<-";
        else if (in_high)
            s += "->";
        else
            s += ">-<";
        s += std::to_string(e.high);
    }
    return s;
}

SignedOrientation parse_orientation(const SignedGraph& g, std::string_view text) {
    std::istringstream is{std::string(text)};
    std::vector<std::string> tokens;
    for (std::string tok; is >> tok;) tokens.push_back(tok);
    if (tokens.size() != g.edge_count())
        throw InputError("expected " + std::to_string(g.edge_count()) + " edge tokens, got " + std::to_string(tokens.size()));
    SignedOrientation o;
    o.into_low.resize(g.edge_count());
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const auto& e = g.edges()[i];
        const std::string low = std::to_string(e.low), high = std::to_string(e.high);
        const std::string& tok = tokens[i];
        if (tok.size() < low.size() + high.size() || tok.compare(0, low.size(), low) != 0 ||
            tok.compare(tok.size() - high.size(), high.size(), high) != 0)
            throw InputError("token '" + tok + "' does not name edge " + low + "-" + high);
        const std::string arrow = tok.substr(low.size(), tok.size() - low.size() - high.size());
        bool in_low, in_high;
        if (arrow == "->") {
            in_low = false;
            in_high = true;
        } else if (arrow == "<-") {
            in_low = true;
            in_high = false;
        } else if (arrow == "<->") {
            in_low = in_high = true;
        } else if (arrow == ">-<") {
            in_low = in_high = false;
        } else {
            throw InputError("unknown arrow in token '" + tok + "'");
        }
        if (half_edge_into(e, in_low, e.high) != in_high)
            throw InputError("token '" + tok + "' violates the edge sign");
        o.into_low[i] = in_low;
    }
    return o;
}

std::string orientation_to_dot(const SignedGraph& g, const SignedOrientation& o) {
    std::ostringstream os;
    os << "graph orientation {\n";
    for (int v = 1; v <= g.vertex_count(); ++v) os << "  " << v << ";\n";
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const auto& e = g.edges()[i];
        bool in_low = half_edge_into(e, o.into_low[i], e.low);
        bool in_high = half_edge_into(e, o.into_low[i], e.high);
        os << "  " << e.low << " -- " << e.high << " [dir=both, arrowtail=" << (in_low ? "normal" : "inv")
           << ", arrowhead=" << (in_high ? "normal" : "inv") << ", label=\"" << (e.negative ? '-' : '+') << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace regiongray
