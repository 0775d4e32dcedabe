#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "regiongray/errors.hpp"
#include "regiongray/graphic.hpp"
#include "support/oracles.hpp"

using namespace regiongray;

namespace {

// Unsigned orientation given as "tail before head" per edge; acyclic iff Kahn's algorithm
// removes every vertex.
bool kahn_acyclic(int n, const std::vector<std::pair<int, int>>& arcs) {
    std::vector<int> indeg(static_cast<std::size_t>(n + 1), 0);
    for (auto [t, h] : arcs) ++indeg[static_cast<std::size_t>(h)];
    std::vector<int> ready;
    for (int v = 1; v <= n; ++v)
        if (indeg[static_cast<std::size_t>(v)] == 0) ready.push_back(v);
    int removed = 0;
    while (!ready.empty()) {
        int v = ready.back();
        ready.pop_back();
        ++removed;
        for (auto [t, h] : arcs)
            if (t == v && --indeg[static_cast<std::size_t>(h)] == 0) ready.push_back(h);
    }
    return removed == n;
}

std::size_t unsigned_acyclic_count(const SignedGraph& g) {
    const auto& edges = g.edges();
    std::size_t count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
        std::vector<std::pair<int, int>> arcs;
        for (std::size_t e = 0; e < edges.size(); ++e) {
            if ((mask >> e) & 1U) arcs.emplace_back(edges[e].high, edges[e].low);
            else arcs.emplace_back(edges[e].low, edges[e].high);
        }
        count += kahn_acyclic(g.vertex_count(), arcs) ? 1 : 0;
    }
    return count;
}

std::vector<SignedGraph> chordal_graphs() {
    return {
        SignedGraph::complete(4),
        SignedGraph::path(5),
        SignedGraph(4, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}}),
        SignedGraph(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {3, 4}, {4, 5}}),
        SignedGraph(5, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {3, 5}}),
        SignedGraph(6, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}, {4, 5}, {4, 6}, {5, 6}}),
        SignedGraph::complete(5),
    };
}

std::vector<SignedGraph> signed_graphs() {
    return {
        SignedGraph(2, {}, {{1, 2}}),
        SignedGraph(3, {{1, 2}}, {{2, 3}}),
        SignedGraph(3, {{2, 3}}, {{1, 2}, {1, 3}}),
        SignedGraph(4, {{1, 2}, {1, 3}, {2, 3}}, {{3, 4}}),
        SignedGraph(4, {{2, 3}}, {{1, 2}, {1, 3}, {2, 4}, {3, 4}}),
    };
}

}  // namespace

TEST_CASE("signed graph construction") {
    SignedGraph g(3, {{2, 1}, {2, 3}}, {{1, 3}});
    REQUIRE(g.edge_count() == 3);
    CHECK(g.edges()[0].low == 1);
    CHECK(g.edges()[0].high == 2);
    CHECK(g.edges()[1].negative);
    CHECK(g.edges()[1].high == 3);
    CHECK(g.is_signed());
    CHECK(g.edge_between(3, 2).has_value());
    CHECK_FALSE(SignedGraph::complete(3).is_signed());
    CHECK(SignedGraph::cycle(4).edge_count() == 4);
    CHECK_THROWS_AS(SignedGraph(2, {{1, 1}}), InputError);
    CHECK_THROWS_AS(SignedGraph(2, {{1, 3}}), InputError);
    CHECK_THROWS_AS(SignedGraph(2, {{1, 2}, {2, 1}}), InputError);
}

TEST_CASE("perfect elimination orderings") {
    for (const auto& g : chordal_graphs()) CHECK(find_peo(g).found());
    auto c4 = find_peo(SignedGraph::cycle(4));
    CHECK_FALSE(c4.found());
    CHECK(c4.stuck.size() == 4);
    CHECK_FALSE(find_peo(SignedGraph::cycle(5)).found());
    for (const auto& g : signed_graphs()) CHECK(find_signed_peo(g).found());
    // Unbalanced triangles block every vertex.
    CHECK_FALSE(find_signed_peo(SignedGraph(3, {{1, 2}, {2, 3}}, {{1, 3}})).found());
    CHECK_FALSE(find_signed_peo(SignedGraph(3, {}, {{1, 2}, {1, 3}, {2, 3}})).found());
    CHECK(is_signed_simplicial(SignedGraph(3, {{2, 3}}, {{1, 2}, {1, 3}}), 1, std::vector<char>(4, 0)));
}

TEST_CASE("graphic arrangements") {
    auto k4 = graph_arrangement(SignedGraph::complete(4));
    CHECK(k4.arrangement.size() == 6);
    CHECK(validate_chain(k4.arrangement, k4.chain));
    CHECK_THROWS_AS(graph_arrangement(SignedGraph::cycle(4)), InputError);
    CHECK_THROWS_AS(graph_arrangement(SignedGraph(3, {}, {{1, 2}, {1, 3}, {2, 3}})), InputError);
    CHECK(graph_hyperplanes(SignedGraph::cycle(4)).size() == 4);
    for (const auto& g : chordal_graphs()) {
        auto fam = graph_arrangement(g);
        CHECK(validate_chain(fam.arrangement, fam.chain));
    }
    for (const auto& g : signed_graphs()) {
        auto fam = graph_arrangement(g);
        CHECK(validate_chain(fam.arrangement, fam.chain));
    }
}

TEST_CASE("region counts equal acyclic orientation counts") {
    std::vector<SignedGraph> all = chordal_graphs();
    for (const auto& g : signed_graphs()) all.push_back(g);
    all.push_back(SignedGraph::cycle(4));
    all.push_back(SignedGraph::cycle(6));
    all.push_back(SignedGraph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}, {{1, 3}}));
    all.push_back(SignedGraph(3, {}, {{1, 2}, {1, 3}, {2, 3}}));
    all.push_back(SignedGraph(3, {{1, 2}, {2, 3}}, {{1, 3}}));
    for (const auto& g : all) {
        auto arr = graph_hyperplanes(g);
        auto regions = enumerate_regions(arr);
        auto brute = brute_force_acyclic_orientations(g);
        CHECK(regions.size() == brute.size());
        CHECK(static_cast<long long>(regions.size()) == oracle::whitney_region_count(arr));
        if (!g.is_signed()) CHECK(regions.size() == unsigned_acyclic_count(g));
        std::set<SignedOrientation> from_regions;
        for (const auto& r : regions) {
            auto o = region_to_orientation(g, r);
            CHECK(is_acyclic_signed(g, o));
            CHECK(orientation_to_region(g, o) == r);
            from_regions.insert(o);
        }
        CHECK(from_regions == std::set<SignedOrientation>(brute.begin(), brute.end()));
    }
    // Known values: K4 has 24 acyclic orientations and the 4-cycle 14.
    CHECK(brute_force_acyclic_orientations(SignedGraph::complete(4)).size() == 24);
    CHECK(brute_force_acyclic_orientations(SignedGraph::cycle(4)).size() == 14);
}

TEST_CASE("cyclic orientations are rejected") {
    auto c3 = SignedGraph::cycle(3);
    for (std::uint64_t mask = 0; mask < 8; ++mask) {
        SignedOrientation o{{static_cast<char>(mask & 1U), static_cast<char>((mask >> 1) & 1U), static_cast<char>((mask >> 2) & 1U)}};
        std::vector<std::pair<int, int>> arcs;
        for (std::size_t e = 0; e < 3; ++e) {
            const auto& ed = c3.edges()[e];
            if (o.into_low[e]) arcs.emplace_back(ed.high, ed.low);
            else arcs.emplace_back(ed.low, ed.high);
        }
        bool acyclic = kahn_acyclic(3, arcs);
        CHECK(is_acyclic_signed(c3, o) == acyclic);
        if (!acyclic) CHECK_THROWS_AS(orientation_to_region(c3, o), InputError);
    }
    // A lone negative edge has two orientations and neither closes a cycle.
    CHECK(brute_force_acyclic_orientations(SignedGraph(2, {}, {{1, 2}})).size() == 2);
}

TEST_CASE("half-edge conventions") {
    SignedEdge pos{1, 2, false};
    CHECK(half_edge_into(pos, true, 1));
    CHECK_FALSE(half_edge_into(pos, true, 2));
    SignedEdge neg{1, 2, true};
    CHECK(half_edge_into(neg, true, 1));
    CHECK(half_edge_into(neg, true, 2));
    CHECK_FALSE(half_edge_into(neg, false, 2));
}

TEST_CASE("Gray codes on acyclic orientations") {
    std::vector<SignedGraph> all = chordal_graphs();
    for (const auto& g : signed_graphs()) all.push_back(g);
    all.push_back(SignedGraph(2, {{1, 2}}));
    for (const auto& g : all) {
        auto res = acyclic_orientation_gray_code(g);
        CHECK(res.listing.cyclic);
        CHECK(verify_listing(res.regions.graph, res.listing.order, true).ok);
        CHECK(res.orientations.size() == brute_force_acyclic_orientations(g).size());
        for (std::size_t i = 0; i < res.orientations.size(); ++i) {
            const auto& a = res.orientations[i];
            const auto& b = res.orientations[(i + 1) % res.orientations.size()];
            std::size_t diff = 0;
            for (std::size_t e = 0; e < a.into_low.size(); ++e) diff += a.into_low[e] != b.into_low[e];
            CHECK(diff == 1);
        }
    }
    CHECK_THROWS_AS(acyclic_orientation_gray_code(SignedGraph::cycle(4)), InputError);
}

TEST_CASE("orientation text") {
    SignedGraph g(3, {{1, 2}}, {{2, 3}});
    SignedOrientation o{{1, 0}};
    auto text = format_orientation(g, o);
    CHECK(text == "1<-2 2>-<3");
    CHECK(parse_orientation(g, text) == o);
    CHECK(format_orientation(g, SignedOrientation{{0, 1}}) == "1->2 2<->3");
    for (const auto& r : enumerate_regions(graph_hyperplanes(g))) {
        auto oo = region_to_orientation(g, r);
        CHECK(parse_orientation(g, format_orientation(g, oo)) == oo);
    }
    CHECK_THROWS_AS(parse_orientation(g, "1->2"), InputError);
    CHECK_THROWS_AS(parse_orientation(g, "1->3 2->3"), InputError);
    auto dot = orientation_to_dot(g, o);
    CHECK(dot.find("1 -- 2 [dir=both, arrowtail=normal, arrowhead=inv") != std::string::npos);
    CHECK(dot.find("2 -- 3 [dir=both, arrowtail=inv, arrowhead=inv") != std::string::npos);
}
