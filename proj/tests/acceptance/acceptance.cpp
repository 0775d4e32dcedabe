// One line per acceptance criterion; exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "regiongray/arrangement.hpp"
#include "regiongray/coxeter.hpp"
#include "regiongray/graphic.hpp"
#include "regiongray/lattice.hpp"
#include "regiongray/triangulation.hpp"
#include "regiongray/zigzag.hpp"
#include "../support/oracles.hpp"

using namespace regiongray;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

std::vector<int> identity(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i + 1;
    return p;
}

std::vector<std::vector<int>> digits(const std::vector<std::string>& words) {
    std::vector<std::vector<int>> out;
    for (const auto& w : words) {
        std::vector<int> p;
        int sign = 1;
        for (char c : w) {
            if (c == '-') {
                sign = -1;
            } else {
                p.push_back(sign * (c - '0'));
                sign = 1;
            }
        }
        out.push_back(p);
    }
    return out;
}

bool cyclic_adjacent_signed(const std::vector<SignedPermutation>& l) {
    for (std::size_t i = 0; i < l.size(); ++i) {
        const auto& a = l[i];
        const auto& b = l[(i + 1) % l.size()];
        std::vector<std::size_t> diff;
        for (std::size_t k = 0; k < a.size(); ++k)
            if (a[k] != b[k]) diff.push_back(k);
        bool sign_flip = diff.size() == 1 && diff[0] == 0 && a[0] == -b[0];
        bool swap = diff.size() == 2 && diff[1] == diff[0] + 1 && a[diff[0]] == b[diff[1]] && a[diff[1]] == b[diff[0]];
        if (!sign_flip && !swap) return false;
    }
    return true;
}

Outcome golden_listings() {
    Outcome o;
    std::vector<std::vector<std::string>> sjt{
        {"1"},
        {"12", "21"},
        {"123", "132", "312", "321", "231", "213"},
        {"1234", "1243", "1423", "4123", "4132", "1432", "1342", "1324", "3124", "3142", "3412", "4312",
         "4321", "3421", "3241", "3214", "2314", "2341", "2431", "4231", "4213", "2413", "2143", "2134"}};
    for (int n = 1; n <= 4; ++n) o.require(sjt_generate(n) == digits(sjt[static_cast<std::size_t>(n - 1)]), "SJT n=" + std::to_string(n));
    o.require(sjt_generate(4).size() == 24, "SJT n=4 size");

    std::vector<std::vector<std::string>> brgc{
        {"0", "1"},
        {"00", "01", "11", "10"},
        {"000", "001", "011", "010", "110", "111", "101", "100"},
        {"0000", "0001", "0011", "0010", "0110", "0111", "0101", "0100", "1100", "1101", "1111", "1110", "1010",
         "1011", "1001", "1000"}};
    for (int n = 1; n <= 4; ++n) o.require(brgc_generate(n) == brgc[static_cast<std::size_t>(n - 1)], "BRGC n=" + std::to_string(n));

    std::vector<std::vector<std::string>> signed_rows{
        {"1", "-1"},
        {"12", "21", "-21", "1-2", "-1-2", "-2-1", "2-1", "-12"},
        {"123",  "132",  "312",  "-312", "1-32", "12-3", "21-3", "2-31", "-321", "321", "231",  "213",
         "-213", "-231", "3-21", "-3-21", "-2-31", "-21-3", "1-2-3", "1-3-2", "-31-2", "31-2", "13-2", "1-23",
         "-1-23", "-13-2", "3-1-2", "-3-1-2", "-1-3-2", "-1-2-3", "-2-1-3", "-2-3-1", "-3-2-1", "3-2-1", "-23-1", "-2-13",
         "2-13", "23-1", "32-1", "-32-1", "2-3-1", "2-1-3", "-12-3", "-1-32", "-3-12", "3-12", "-132", "-123"}};
    for (int n = 1; n <= 3; ++n) {
        auto l = signed_sjt_generate(n);
        o.require(l == digits(signed_rows[static_cast<std::size_t>(n - 1)]), "signed n=" + std::to_string(n));
        o.require(cyclic_adjacent_signed(l), "signed cyclic n=" + std::to_string(n));
    }
    o.require(signed_sjt_generate(3).size() == 48, "signed n=3 size");
    return o;
}

void check_cycle(Outcome& o, const ArrangementFamily& fam, const std::string& tag) {
    auto rg = build_region_graph(fam.arrangement);
    auto l = ham_cycle_supersolvable(fam.arrangement, fam.chain);
    auto v = verify_listing(rg.graph, l.order, true);
    o.require(v.ok && l.cyclic && l.order.size() % 2 == 0, tag + ": " + v.reason);
}

std::vector<SignedGraph> peo_graphs() {
    return {
        SignedGraph::complete(4),
        SignedGraph::complete(5),
        SignedGraph::path(6),
        SignedGraph(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {3, 4}, {4, 5}}),
        SignedGraph(6, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}, {4, 5}, {4, 6}, {5, 6}}),
        SignedGraph(3, {{2, 3}}, {{1, 2}, {1, 3}}),
        SignedGraph(4, {{2, 3}}, {{1, 2}, {1, 3}, {2, 4}, {3, 4}}),
        SignedGraph(4, {{1, 2}, {1, 3}, {2, 3}}, {{3, 4}}),
    };
}

Outcome region_cycles() {
    Outcome o;
    for (int n = 2; n <= 8; ++n) check_cycle(o, coordinate_arrangement(n), "coordinate n=" + std::to_string(n));
    for (int n = 3; n <= 6; ++n) check_cycle(o, type_a_arrangement(n), "type A n=" + std::to_string(n));
    for (int n = 2; n <= 4; ++n) check_cycle(o, type_b_arrangement(n), "type B n=" + std::to_string(n));
    int graphs = 0;
    for (const auto& g : peo_graphs()) {
        auto fam = graph_arrangement(g);
        if (rank(fam.arrangement) < 2) continue;
        check_cycle(o, fam, "graph " + std::to_string(graphs));
        ++graphs;
    }
    o.require(graphs >= 5, "fewer than five graphs");
    return o;
}

struct LatticeCase {
    std::string name;
    ArrangementFamily fam;
    SignVector base;
    std::vector<ElementPair> named;
};

LatticeCase type_a_case(int n) {
    auto fam = type_a_arrangement(n);
    auto rg = build_region_graph(fam.arrangement);
    std::vector<ElementPair> gens;
    for (auto& [p, q] : sylvester_generators(n))
        gens.emplace_back(rg.index_of(permutation_to_region(p)), rg.index_of(permutation_to_region(q)));
    return {"type A n=" + std::to_string(n), fam, permutation_to_region(identity(n)), gens};
}

LatticeCase type_b_case(int n) {
    auto fam = type_b_arrangement(n);
    auto rg = build_region_graph(fam.arrangement);
    std::vector<ElementPair> gens;
    for (auto& [p, q] : typeb_sylvester_generators(n))
        gens.emplace_back(rg.index_of(signed_permutation_to_region(p)), rg.index_of(signed_permutation_to_region(q)));
    return {"type B n=" + std::to_string(n), fam, signed_permutation_to_region(identity(n)), gens};
}

Outcome quotient_paths() {
    Outcome o;
    std::mt19937 rng(20240611);
    std::vector<LatticeCase> cases;
    for (int n = 2; n <= 5; ++n) cases.push_back(type_a_case(n));
    for (int n = 1; n <= 3; ++n) cases.push_back(type_b_case(n));
    for (const auto& c : cases) {
        auto rg = build_region_graph(c.fam.arrangement);
        auto lat = make_lattice(poset_of_regions(rg, rg.index_of(c.base)));
        std::vector<std::pair<std::string, CongruencePartition>> congs;
        congs.emplace_back("discrete", CongruencePartition::discrete(lat.size()));
        congs.emplace_back("full", CongruencePartition::full(lat.size()));
        congs.emplace_back("rewriting", congruence_closure(lat, c.named));
        // Each random congruence is generated by two cover pairs drawn with a fixed seed.
        auto covers = lat.poset().covers();
        std::uniform_int_distribution<std::size_t> pick(0, covers.size() - 1);
        std::set<std::size_t> class_counts;
        for (int t = 0; t < 20; ++t) {
            congs.emplace_back("random " + std::to_string(t), congruence_closure(lat, {covers[pick(rng)], covers[pick(rng)]}));
            class_counts.insert(congs.back().second.size());
        }
        if (lat.size() >= 24) o.require(class_counts.size() > 2, c.name + ": random congruences are not varied");
        for (const auto& [name, cong] : congs) {
            auto l = ham_path_quotient(rg, c.fam.chain, c.base, cong);
            auto q = cover_graph(quotient_cover_graph(lat, cong));
            auto v = verify_listing(q, l.order, false);
            o.require(v.ok, c.name + " " + name + ": " + v.reason);
        }
    }
    return o;
}

Outcome oracle_equivalences() {
    Outcome o;
    for (int n = 2; n <= 5; ++n) {
        auto fam = type_a_arrangement(n);
        auto rg = build_region_graph(fam.arrangement);
        std::vector<Permutation> decoded;
        for (auto v : greedy_traversal(rg, fam.chain, permutation_to_region(identity(n))).order)
            decoded.push_back(region_to_permutation(rg.regions[v], n));
        o.require(decoded == sjt_generate(n), "SJT vs greedy n=" + std::to_string(n));
    }
    for (int n = 1; n <= 4; ++n) {
        auto fam = type_b_arrangement(n);
        auto rg = build_region_graph(fam.arrangement);
        std::vector<SignedPermutation> decoded;
        for (auto v : greedy_traversal(rg, fam.chain, signed_permutation_to_region(identity(n))).order)
            decoded.push_back(region_to_signed_permutation(rg.regions[v], n));
        o.require(decoded == signed_sjt_generate(n), "signed SJT vs greedy n=" + std::to_string(n));
    }
    for (int n = 1; n <= 10; ++n) {
        auto fam = coordinate_arrangement(n);
        auto rg = build_region_graph(fam.arrangement);
        std::vector<std::string> decoded;
        for (auto v : greedy_traversal(rg, fam.chain, bits_to_region(std::string(static_cast<std::size_t>(n), '0'))).order)
            decoded.push_back(region_to_bits(rg.regions[v]));
        o.require(decoded == brgc_generate(n), "BRGC vs greedy n=" + std::to_string(n));
    }

    std::vector<SignedGraph> graphs = peo_graphs();
    graphs.push_back(SignedGraph::cycle(5));
    graphs.push_back(SignedGraph::complete(6));
    graphs.push_back(SignedGraph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}, {{1, 3}, {2, 4}}));
    graphs.push_back(SignedGraph(3, {}, {{1, 2}, {1, 3}, {2, 3}}));
    // 20 edges: K6 plus a pendant path of five vertices.
    graphs.push_back(SignedGraph(11, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 4}, {3, 5},
                                      {3, 6}, {4, 5}, {4, 6}, {5, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 10}, {10, 11}}));
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const auto& g = graphs[i];
        if (g.edge_count() > 20) continue;
        auto regions = enumerate_regions(graph_hyperplanes(g));
        auto brute = brute_force_acyclic_orientations(g);
        o.require(regions.size() == brute.size(), "region count vs acyclic orientations, graph " + std::to_string(i));
    }

    std::mt19937 rng(99);
    std::vector<LatticeCase> cases{type_a_case(3), type_a_case(4), type_a_case(5), type_a_case(6), type_b_case(2), type_b_case(3)};
    for (const auto& c : cases) {
        auto rg = build_region_graph(c.fam.arrangement);
        if (rg.size() > 720) continue;
        auto lat = make_lattice(poset_of_regions(rg, rg.index_of(c.base)));
        std::vector<std::vector<ElementPair>> gen_sets{{}, c.named, lat.poset().covers()};
        std::uniform_int_distribution<std::size_t> pick(0, lat.size() - 1);
        for (int t = 0; t < 5; ++t) gen_sets.push_back({{pick(rng), pick(rng)}, {pick(rng), pick(rng)}});
        for (const auto& gens : gen_sets)
            o.require(oracle::labels_of(congruence_closure(lat, gens)) == oracle::naive_closure(lat, gens),
                      "closure vs naive fixpoint on " + c.name);
    }
    return o;
}

Outcome triangulation_suite() {
    Outcome o;
    const std::size_t counts[] = {2, 6, 20, 70, 252};
    for (int n = 1; n <= 5; ++n) {
        auto all = enumerate_symmetric_triangulations(n);
        o.require(all.size() == counts[n - 1], "triangulation count n=" + std::to_string(n));
        for (const auto& t : all) o.require(theta_map(pi_map(t)) == t, "theta(pi(T)) n=" + std::to_string(n));
        auto avoiders = avoiding_signed_permutations(n);
        o.require(avoiders.size() == counts[n - 1], "avoider count n=" + std::to_string(n));
        for (const auto& f : avoiders) o.require(pi_map(theta_map(f)) == f, "pi(theta(w)) n=" + std::to_string(n));
        o.require(verify_flip_jump(n), "flip/jump isomorphism n=" + std::to_string(n));
    }
    for (int n = 1; n <= 4; ++n) {
        auto l = triangulation_gray_code(n);
        o.require(l.triangulations.size() == counts[n - 1], "Gray code length n=" + std::to_string(n));
        o.require(std::set<SymmetricTriangulation>(l.triangulations.begin(), l.triangulations.end()).size() == counts[n - 1],
                  "Gray code repeats n=" + std::to_string(n));
        for (std::size_t i = 0; i < l.triangulations.size(); ++i)
            o.require(differ_by_flip(l.triangulations[i], l.triangulations[(i + 1) % l.triangulations.size()]),
                      "Gray code step n=" + std::to_string(n));
        o.require(l.cyclic, "Gray code not cyclic n=" + std::to_string(n));
    }
    std::vector<std::vector<std::string>> pinned{
        {"1", "-1"},
        {"12", "21", "-21", "1-2", "-1-2", "-12"},
        {"123", "132", "312", "-312", "1-32", "21-3", "2-31", "-321", "321", "213", "-213", "-2-31", "-21-3", "1-2-3",
         "1-23", "-1-23", "-1-2-3", "-1-32", "-132", "-123"}};
    for (int n = 1; n <= 3; ++n) {
        std::vector<SignedPermutation> windows;
        for (const auto& f : triangulation_gray_code(n).permutations) windows.push_back(to_window(f));
        o.require(windows == digits(pinned[static_cast<std::size_t>(n - 1)]), "pinned order n=" + std::to_string(n));
    }
    return o;
}

void check_fibers(Outcome& o, const ArrangementFamily& fam, const std::string& tag) {
    for (std::size_t l = 1; l < fam.chain.levels.size(); ++l) {
        // Subarrangement of level l, re-indexed, split into the previous level and the rest.
        const IndexSet& upper = fam.chain.levels[l];
        const IndexSet& lower = fam.chain.levels[l - 1];
        std::vector<std::vector<Rational>> normals;
        IndexSet h0, h1;
        for (std::size_t k = 0; k < upper.size(); ++k) {
            std::vector<Rational> v;
            for (const auto& x : fam.arrangement.normal(upper[k])) v.emplace_back(x);
            normals.push_back(std::move(v));
            bool old_level = std::find(lower.begin(), lower.end(), upper[k]) != lower.end();
            (old_level ? h0 : h1).push_back(k);
        }
        auto sub = build_region_graph(HyperplaneArrangement(fam.arrangement.dim(), normals));
        auto fp = fiber_partition(sub, h0, h1);
        auto problem = suspension_problem(sub, fp);
        o.require(!problem, tag + " level " + std::to_string(l) + ": " + problem.value_or(""));
        for (const auto& path : fp.paths) o.require(path.size() == h1.size() + 1, tag + " fiber length");
    }
}

Outcome structural_invariants() {
    Outcome o;
    std::vector<std::pair<std::string, ArrangementFamily>> fams;
    for (int n = 1; n <= 8; ++n) fams.emplace_back("coordinate n=" + std::to_string(n), coordinate_arrangement(n));
    for (int n = 2; n <= 6; ++n) fams.emplace_back("type A n=" + std::to_string(n), type_a_arrangement(n));
    for (int n = 1; n <= 4; ++n) fams.emplace_back("type B n=" + std::to_string(n), type_b_arrangement(n));
    int gi = 0;
    for (const auto& g : peo_graphs()) fams.emplace_back("graph " + std::to_string(gi++), graph_arrangement(g));
    for (const auto& [tag, fam] : fams) {
        auto rg = build_region_graph(fam.arrangement);
        o.require(is_connected(rg.graph), tag + " disconnected");
        o.require(two_coloring(rg.graph).has_value(), tag + " not bipartite");
        o.require(rg.size() % 2 == 0, tag + " odd order");
        check_fibers(o, fam, tag);
    }
    HyperplaneArrangement generic(3, std::vector<std::vector<long long>>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}});
    auto rg = build_region_graph(generic);
    o.require(rg.size() == 14, "generic region count");
    auto colors = two_coloring(rg.graph);
    o.require(colors.has_value(), "generic not bipartite");
    if (colors) {
        std::size_t ones = static_cast<std::size_t>(std::count(colors->begin(), colors->end(), 1));
        o.require(std::min(ones, 14 - ones) == 6 && std::max(ones, 14 - ones) == 8, "generic bipartition");
    }
    for (std::uint64_t s = 1; s < 15; ++s) {
        IndexSet a, b;
        for (std::size_t i = 0; i < 4; ++i) ((s >> i) & 1U ? a : b).push_back(i);
        o.require(!check_supersolvable_split(generic, a, b), "generic split accepted");
    }
    return o;
}

Outcome performance() {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    SignedSjtGenerator gen(7);
    std::size_t count = 1;
    while (gen.next()) ++count;
    double signed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(count == 645120, "signed_sjt(7) emitted " + std::to_string(count));
    o.require(signed_s < 5.0, "signed_sjt(7) took " + std::to_string(signed_s) + " s");

    t0 = std::chrono::steady_clock::now();
    SjtGenerator sjt(8);
    count = 1;
    while (sjt.next()) ++count;
    double sjt_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(count == 40320, "sjt(8) emitted " + std::to_string(count));
    o.require(sjt_s < 0.5, "sjt(8) took " + std::to_string(sjt_s) + " s");
    std::ostringstream os;
    os << "signed_sjt(7) " << signed_s << " s, sjt(8) " << sjt_s << " s";
    if (o.ok) o.detail = os.str();
    return o;
}

struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome()> body;
};

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {1, "golden listings", 1.0, golden_listings},
        {2, "Hamiltonian cycles on supersolvable arrangements", 30.0, region_cycles},
        {3, "Hamiltonian paths on quotient lattices", 60.0, quotient_paths},
        {4, "oracle equivalences", 0.0, oracle_equivalences},
        {5, "symmetric triangulations", 60.0, triangulation_suite},
        {6, "structural invariants", 0.0, structural_invariants},
        {7, "loopless performance", 0.0, performance},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.budget_s > 0 && secs >= c.budget_s) o.require(false, "over the time budget");
        std::printf("criterion %d (%s): %s in %.3f s%s%s\n", c.id, c.name, o.ok ? "PASS" : "FAIL", secs,
                    o.detail.empty() ? "" : "; ", o.detail.c_str());
        failures += o.ok ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
