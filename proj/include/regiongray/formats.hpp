#pragma once

#include <optional>
#include <string>
#include <vector>

#include "regiongray/arrangement.hpp"
#include "regiongray/graphic.hpp"
#include "regiongray/lattice.hpp"
#include "regiongray/triangulation.hpp"

namespace regiongray {

struct ArrangementInput {
    HyperplaneArrangement arrangement;
    std::optional<SupersolvableChain> chain;
};

// {"dim": n, "normals": [[entry, ...], ...], "chain": [[index, ...], ...]}; an entry is an
// integer or a [num, den] pair, hyperplane indices are 0-based and "chain" is optional.
ArrangementInput parse_arrangement_json(const std::string& text);
std::string arrangement_to_json(const HyperplaneArrangement& arr, const std::optional<SupersolvableChain>& chain = std::nullopt);

// {"n": int, "pos_edges": [[i, j], ...], "neg_edges": [[i, j], ...]} with 1-indexed vertices.
SignedGraph parse_graph_json(const std::string& text);
std::string graph_to_json(const SignedGraph& g);

// {"kind": "named", "name": "discrete"|"full"|"sylvester"|"typeb-sylvester"}
// {"kind": "generators", "pairs": [[region, region], ...]}
// {"kind": "partition", "classes": [[region, ...], ...]}
// Regions are sign strings. Named congruences other than discrete/full are resolved by the caller.
struct CongruenceSpec {
    std::string kind;
    std::string name;
    std::vector<std::pair<SignVector, SignVector>> pairs;
    std::vector<std::vector<SignVector>> classes;
};

CongruenceSpec parse_congruence_json(const std::string& text);
// Resolves generators or a partition against the region lattice; throws InputError on
// unknown regions or a partition that is not a congruence.
CongruencePartition resolve_congruence(const CongruenceSpec& spec, const RegionGraph& rg, const FiniteLattice& lat);

std::string sign_vector_list_json(const std::vector<SignVector>& v);

std::string dot_quote(const std::string& s);
// Undirected graph with one label per vertex; `highlight` edges are drawn bold.
std::string graph_to_dot(const std::string& name, const UndirectedGraph& g, const std::vector<std::string>& labels,
                         const std::vector<std::pair<std::size_t, std::size_t>>& highlight = {});
// Hasse diagram with edges oriented upward.
std::string poset_to_dot(const std::string& name, const FinitePoset& p, const std::vector<std::string>& labels);
std::string graph_to_json_string(const UndirectedGraph& g, const std::vector<std::string>& labels);

std::string read_file(const std::string& path);

}  // namespace regiongray
