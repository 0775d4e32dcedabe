#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "regiongray/arrangement.hpp"
#include "regiongray/coxeter.hpp"
#include "regiongray/errors.hpp"
#include "support/oracles.hpp"

using namespace regiongray;

namespace {

HyperplaneArrangement generic_four() {
    return HyperplaneArrangement(3, std::vector<std::vector<long long>>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}});
}

IndexSet range_set(std::size_t lo, std::size_t hi) {
    IndexSet s;
    for (std::size_t i = lo; i < hi; ++i) s.push_back(i);
    return s;
}

// Every way to split the hyperplanes into two nonempty parts.
std::vector<std::pair<IndexSet, IndexSet>> all_splits(std::size_t m) {
    std::vector<std::pair<IndexSet, IndexSet>> out;
    for (std::uint64_t s = 1; s + 1 < (std::uint64_t{1} << m); ++s) {
        IndexSet a, b;
        for (std::size_t i = 0; i < m; ++i) ((s >> i) & 1U ? a : b).push_back(i);
        out.emplace_back(a, b);
    }
    return out;
}

}  // namespace

TEST_CASE("rank of small arrangements") {
    CHECK(rank(coordinate_arrangement(3).arrangement) == 3);
    CHECK(rank(type_a_arrangement(4).arrangement) == 3);
    HyperplaneArrangement dep(3, std::vector<std::vector<long long>>{{1, 1, 0}, {1, 0, 1}, {0, 1, -1}});
    CHECK(rank(dep) == 2);
}

TEST_CASE("arrangement input validation") {
    CHECK_THROWS_AS(HyperplaneArrangement(2, std::vector<std::vector<long long>>{{0, 0}}), InputError);
    CHECK_THROWS_AS(HyperplaneArrangement(2, std::vector<std::vector<long long>>{{1, 2}, {-2, -4}}), InputError);
    CHECK_THROWS_AS(HyperplaneArrangement(2, std::vector<std::vector<long long>>{{1, 2, 3}}), InputError);
    CHECK_THROWS_AS(HyperplaneArrangement(2, std::vector<std::vector<long long>>{}), InputError);
    std::vector<std::vector<Rational>> q{{Rational(1, 2), Rational(1, 3)}, {Rational(0), Rational(2)}};
    HyperplaneArrangement arr(2, q);
    CHECK(arr.normal(0) == std::vector<Integer>{3, 2});
    CHECK(arr.normal(1) == std::vector<Integer>{0, 1});
}

TEST_CASE("region counts agree with Whitney's formula") {
    std::vector<HyperplaneArrangement> cases{
        coordinate_arrangement(3).arrangement, type_a_arrangement(4).arrangement,
        type_b_arrangement(3).arrangement,    generic_four(),
        HyperplaneArrangement(3, std::vector<std::vector<long long>>{{1, 1, 0}, {1, 0, 1}, {0, 1, -1}}),
        HyperplaneArrangement(3, std::vector<std::vector<long long>>{{1, 2, 3}, {-1, 1, 0}, {2, 0, -1}, {1, 1, 1}, {0, 1, 2}}),
    };
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> coef(-2, 2);
    while (cases.size() < 14) {
        std::vector<std::vector<long long>> normals;
        std::set<std::vector<long long>> seen;
        while (normals.size() < 6) {
            std::vector<long long> v{coef(rng), coef(rng), coef(rng), coef(rng)};
            if (std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; })) continue;
            long long g = 0;
            for (long long x : v) g = std::gcd(g, x < 0 ? -x : x);
            for (auto& x : v) x /= g;
            auto lead = std::find_if(v.begin(), v.end(), [](long long x) { return x != 0; });
            if (*lead < 0) for (auto& x : v) x = -x;
            if (seen.insert(v).second) normals.push_back(v);
        }
        cases.emplace_back(4, normals);
    }
    for (const auto& arr : cases) {
        auto regions = enumerate_regions(arr);
        CHECK(static_cast<long long>(regions.size()) == oracle::whitney_region_count(arr));
        for (const auto& r : regions) {
            auto p = interior_point(arr, r);
            REQUIRE(p.has_value());
            CHECK(sign_vector_at(arr, *p) == r);
        }
    }
}

TEST_CASE("region enumeration is exhaustive over all sign vectors") {
    auto arr = generic_four();
    auto regions = enumerate_regions(arr);
    std::size_t feasible = 0;
    for (std::uint64_t b = 0; b < 16; ++b) feasible += is_feasible(arr, SignVector(4, b)) ? 1 : 0;
    CHECK(feasible == 14);
    CHECK(regions.size() == 14);
    CHECK(std::is_sorted(regions.begin(), regions.end()));
    CHECK(!is_feasible(arr, SignVector::parse("+++-")));
    CHECK(!is_feasible(arr, SignVector::parse("---+")));
}

TEST_CASE("family region counts") {
    for (int n = 1; n <= 10; ++n) CHECK(enumerate_regions(coordinate_arrangement(n).arrangement).size() == (std::size_t{1} << n));
    std::size_t fact = 1;
    for (int n = 2; n <= 5; ++n) {
        fact *= static_cast<std::size_t>(n);
        CHECK(enumerate_regions(type_a_arrangement(n).arrangement).size() == fact);
    }
    std::size_t expected[] = {2, 8, 48, 384};
    for (int n = 1; n <= 4; ++n) CHECK(enumerate_regions(type_b_arrangement(n).arrangement).size() == expected[n - 1]);
}

TEST_CASE("region graphs") {
    auto cube = build_region_graph(coordinate_arrangement(3).arrangement);
    CHECK(cube.size() == 8);
    CHECK(cube.graph.edge_count() == 12);

    auto hex = build_region_graph(type_a_arrangement(3).arrangement);
    CHECK(hex.size() == 6);
    CHECK(hex.graph.edge_count() == 6);
    for (std::size_t v = 0; v < 6; ++v) CHECK(hex.graph.neighbors(v).size() == 2);
    CHECK(is_connected(hex.graph));

    auto perm4 = build_region_graph(type_a_arrangement(4).arrangement);
    CHECK(perm4.size() == 24);
    CHECK(perm4.graph.edge_count() == 36);
    for (std::size_t v = 0; v < 24; ++v) CHECK(perm4.graph.neighbors(v).size() == 3);

    for (const auto& rg : {cube, hex, perm4, build_region_graph(type_b_arrangement(3).arrangement),
                           build_region_graph(generic_four())}) {
        CHECK_FALSE(region_graph_problem(rg).has_value());
    }
}

TEST_CASE("generic arrangement with four hyperplanes") {
    auto rg = build_region_graph(generic_four());
    auto coloring = two_coloring(rg.graph);
    REQUIRE(coloring.has_value());
    std::size_t black = static_cast<std::size_t>(std::count(coloring->begin(), coloring->end(), 1));
    CHECK(std::min(black, rg.size() - black) == 6);
    CHECK(std::max(black, rg.size() - black) == 8);
    for (auto& [a, b] : all_splits(4)) {
        CHECK_FALSE(check_supersolvable_split(generic_four(), a, b));
    }
    CHECK_FALSE(find_supersolvable_chain(generic_four()).has_value());
}

TEST_CASE("supersolvable splits of the reflection families") {
    auto a4 = type_a_arrangement(4).arrangement;
    CHECK(check_supersolvable_split(a4, range_set(0, 3), range_set(3, 6)));
    auto b3 = type_b_arrangement(3).arrangement;
    CHECK(check_supersolvable_split(b3, range_set(0, 4), range_set(4, 9)));
    CHECK_FALSE(check_supersolvable_split(a4, {0, 3, 5}, {1, 2, 4}));
    CHECK_THROWS_AS(check_supersolvable_split(a4, {0, 1, 2, 3}, {3, 4, 5}), InputError);
    CHECK_THROWS_AS(check_supersolvable_split(a4, {0, 1}, {3, 4, 5}), InputError);
}

TEST_CASE("chain validation") {
    auto a4 = type_a_arrangement(4);
    CHECK(validate_chain(a4.arrangement, a4.chain));
    SupersolvableChain bad{{{0, 3, 5}, range_set(0, 6)}};
    CHECK_FALSE(validate_chain(a4.arrangement, bad));
    SupersolvableChain broken{{{0, 1, 2}, {0, 1}, range_set(0, 6)}};
    CHECK_THROWS_AS(validate_chain(a4.arrangement, broken), InputError);
    auto a3 = type_a_arrangement(3).arrangement;
    CHECK(validate_chain(a3, SupersolvableChain{{range_set(0, 3)}}));
    for (int n = 1; n <= 4; ++n) CHECK(validate_chain(type_b_arrangement(n).arrangement, type_b_arrangement(n).chain));
    for (int n = 1; n <= 6; ++n) CHECK(validate_chain(coordinate_arrangement(n).arrangement, coordinate_arrangement(n).chain));
    auto found = find_supersolvable_chain(a4.arrangement);
    REQUIRE(found.has_value());
    CHECK(validate_chain(a4.arrangement, *found));
}

TEST_CASE("fiber partitions") {
    struct Case {
        ArrangementFamily fam;
        IndexSet h0, h1;
        std::size_t fibers, length;
    };
    std::vector<Case> cases{
        {type_a_arrangement(4), range_set(0, 3), range_set(3, 6), 6, 4},
        {coordinate_arrangement(3), range_set(0, 2), range_set(2, 3), 4, 2},
        {type_b_arrangement(3), range_set(0, 4), range_set(4, 9), 8, 6},
        {type_a_arrangement(5), range_set(0, 6), range_set(6, 10), 24, 5},
    };
    for (const auto& c : cases) {
        auto rg = build_region_graph(c.fam.arrangement);
        auto fp = fiber_partition(rg, c.h0, c.h1);
        CHECK(fp.paths.size() == c.fibers);
        for (const auto& path : fp.paths) {
            CHECK(path.size() == c.length);
            for (std::size_t i = 0; i + 1 < path.size(); ++i) CHECK(rg.graph.adjacent(path[i], path[i + 1]));
        }
        CHECK_FALSE(suspension_problem(rg, fp).has_value());

        // Independent restatement: fibers adjacent in the base are joined exactly at
        // equal offsets, other fiber pairs not at all.
        std::map<std::pair<std::size_t, std::size_t>, std::set<std::pair<std::size_t, std::size_t>>> cross;
        std::vector<std::size_t> offset(rg.size());
        for (const auto& path : fp.paths)
            for (std::size_t i = 0; i < path.size(); ++i) offset[path[i]] = i;
        for (auto [a, b] : rg.graph.edges()) {
            std::size_t fa = fp.fiber_of[a], fb = fp.fiber_of[b];
            if (fa == fb) continue;
            CHECK(offset[a] == offset[b]);
            cross[{std::min(fa, fb), std::max(fa, fb)}].insert({offset[a], offset[b]});
        }
        for (const auto& [pair, offs] : cross) {
            CHECK(offs.count({0, 0}) == 1);
            CHECK(offs.count({c.length - 1, c.length - 1}) == 1);
            CHECK(hamming(fp.projections[pair.first], fp.projections[pair.second]) == 1);
        }
    }
}

TEST_CASE("canonical base regions") {
    auto a4 = type_a_arrangement(4);
    auto bases = canonical_base_regions(a4.arrangement, a4.chain);
    CHECK(std::find(bases.begin(), bases.end(), permutation_to_region({1, 2, 3, 4})) != bases.end());

    auto a3 = type_a_arrangement(3);
    CHECK(canonical_base_regions(a3.arrangement, a3.chain).size() == 6);

    auto b2 = type_b_arrangement(2);
    auto bb = canonical_base_regions(b2.arrangement, b2.chain);
    CHECK(std::find(bb.begin(), bb.end(), signed_permutation_to_region({1, 2})) != bb.end());
    // The standard chain of type B for n = 2 is a single rank-2 level.
    CHECK(bb.size() == 8);

    // Oracle: a region is canonical iff it is an end of its fiber path at every level.
    for (auto fam : {type_a_arrangement(4), type_b_arrangement(3), coordinate_arrangement(3)}) {
        auto rg = build_region_graph(fam.arrangement);
        std::set<SignVector> expected(rg.regions.begin(), rg.regions.end());
        for (std::size_t l = fam.chain.levels.size(); l-- > 1;) {
            const IndexSet& upper = fam.chain.levels[l];
            const IndexSet& lower = fam.chain.levels[l - 1];
            std::uint64_t um = mask_of(upper), lm = mask_of(lower);
            std::vector<SignVector> level_regions;
            for (const auto& r : rg.regions) level_regions.push_back(r.masked(um));
            std::sort(level_regions.begin(), level_regions.end());
            level_regions.erase(std::unique(level_regions.begin(), level_regions.end()), level_regions.end());
            // Ends of a fiber: exactly one neighbor inside the fiber (or a lone vertex).
            for (auto it = expected.begin(); it != expected.end();) {
                SignVector r = it->masked(um);
                int inside = 0;
                for (std::size_t h : upper) {
                    if ((lm >> h) & 1U) continue;
                    SignVector s = r.flipped(static_cast<int>(h));
                    if (std::binary_search(level_regions.begin(), level_regions.end(), s)) ++inside;
                }
                it = inside <= 1 ? std::next(it) : expected.erase(it);
            }
        }
        auto got = canonical_base_regions(rg, fam.chain);
        CHECK(std::set<SignVector>(got.begin(), got.end()) == expected);
    }
}

TEST_CASE("opposite regions") {
    CHECK(opposite_region(SignVector::parse("+++")) == SignVector::parse("---"));
    auto a3 = type_a_arrangement(3);
    auto rg = build_region_graph(a3.arrangement);
    for (const auto& r : rg.regions) {
        auto o = opposite_region(r);
        CHECK(o != r);
        CHECK(opposite_region(o) == r);
        CHECK(rg.find(o).has_value());
        auto p = region_to_permutation(r, 3);
        auto q = region_to_permutation(o, 3);
        std::reverse(q.begin(), q.end());
        CHECK(p == q);
    }
}

TEST_CASE("sign vector text") {
    auto s = SignVector::parse("+-+-");
    CHECK(s.size() == 4);
    CHECK(s.str() == "+-+-");
    CHECK(s.minus_count() == 2);
    CHECK(SignVector::parse("++") < SignVector::parse("+-"));
    CHECK(SignVector::parse("+-") < SignVector::parse("-+"));
    CHECK_THROWS_AS(SignVector::parse("+x"), InputError);
}
