#include "regiongray/formats.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "regiongray/errors.hpp"

namespace regiongray {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

template <class T>
T field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw InputError(std::string("bad field '") + key + "': " + e.what());
    }
}

Rational entry_value(const json& e) {
    if (e.is_number_integer()) return Rational(e.get<long long>());
    if (e.is_array() && e.size() == 2 && e[0].is_number_integer() && e[1].is_number_integer()) {
        long long den = e[1].get<long long>();
        if (den == 0) throw InputError("zero denominator in a normal");
        return Rational(e[0].get<long long>(), den);
    }
    if (e.is_string()) {
        try {
            return Rational(e.get<std::string>());
        } catch (const std::exception&) {
        }
    }
    throw InputError("normal entries must be integers or [num, den] pairs");
}

SignVector region_of(const json& e) {
    if (!e.is_string()) throw InputError("regions must be sign strings");
    try {
        return SignVector::parse(e.get<std::string>());
    } catch (const std::exception& ex) {
        throw InputError(std::string("bad sign string: ") + ex.what());
    }
}

std::vector<std::pair<int, int>> edge_list(const json& j, const char* key) {
    std::vector<std::pair<int, int>> out;
    if (!j.contains(key)) return out;
    for (const auto& e : j.at(key)) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw InputError(std::string("edges in '") + key + "' must be [i, j] pairs");
        out.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return out;
}

}  // namespace

ArrangementInput parse_arrangement_json(const std::string& text) {
    json j = parse_json(text);
    int dim = field<int>(j, "dim");
    if (dim < 1) throw InputError("dim must be positive");
    if (!j.contains("normals") || !j["normals"].is_array()) throw InputError("missing field 'normals'");
    std::vector<std::vector<Rational>> normals;
    for (const auto& row : j["normals"]) {
        if (!row.is_array() || static_cast<int>(row.size()) != dim) throw InputError("every normal needs dim entries");
        std::vector<Rational> v;
        for (const auto& e : row) v.push_back(entry_value(e));
        normals.push_back(std::move(v));
    }
    if (normals.empty()) throw InputError("an arrangement needs at least one hyperplane");
    ArrangementInput in{HyperplaneArrangement(dim, normals), std::nullopt};
    if (j.contains("chain")) {
        SupersolvableChain chain;
        for (const auto& level : j["chain"]) {
            IndexSet s;
            for (const auto& idx : level) {
                if (!idx.is_number_integer() || idx.get<long long>() < 0 ||
                    idx.get<long long>() >= static_cast<long long>(normals.size()))
                    throw InputError("chain index out of range");
                s.push_back(idx.get<std::size_t>());
            }
            chain.levels.push_back(std::move(s));
        }
        in.chain = std::move(chain);
    }
    return in;
}

std::string arrangement_to_json(const HyperplaneArrangement& arr, const std::optional<SupersolvableChain>& chain) {
    json j;
    j["dim"] = arr.dim();
    json normals = json::array();
    for (const auto& n : arr.normals()) {
        json row = json::array();
        for (const auto& x : n) row.push_back(x.convert_to<long long>());
        normals.push_back(row);
    }
    j["normals"] = normals;
    if (chain) j["chain"] = chain->levels;
    return j.dump();
}

SignedGraph parse_graph_json(const std::string& text) {
    json j = parse_json(text);
    int n = field<int>(j, "n");
    return SignedGraph(n, edge_list(j, "pos_edges"), edge_list(j, "neg_edges"));
}

std::string graph_to_json(const SignedGraph& g) {
    json pos = json::array(), neg = json::array();
    for (const auto& e : g.edges()) (e.negative ? neg : pos).push_back({e.low, e.high});
    return json{{"n", g.vertex_count()}, {"pos_edges", pos}, {"neg_edges", neg}}.dump();
}

CongruenceSpec parse_congruence_json(const std::string& text) {
    json j = parse_json(text);
    CongruenceSpec spec;
    spec.kind = field<std::string>(j, "kind");
    if (spec.kind == "named") {
        spec.name = field<std::string>(j, "name");
    } else if (spec.kind == "generators") {
        for (const auto& p : field<json>(j, "pairs")) {
            if (!p.is_array() || p.size() != 2) throw InputError("generator pairs need two regions");
            spec.pairs.emplace_back(region_of(p[0]), region_of(p[1]));
        }
    } else if (spec.kind == "partition") {
        for (const auto& c : field<json>(j, "classes")) {
            std::vector<SignVector> cls;
            for (const auto& r : c) cls.push_back(region_of(r));
            spec.classes.push_back(std::move(cls));
        }
    } else {
        throw InputError("unknown congruence kind '" + spec.kind + "'");
    }
    return spec;
}

CongruencePartition resolve_congruence(const CongruenceSpec& spec, const RegionGraph& rg, const FiniteLattice& lat) {
    auto lookup = [&](const SignVector& r) {
        auto idx = rg.find(r);
        if (!idx) throw InputError("region " + r.str() + " is not a region of the arrangement");
        return *idx;
    };
    if (spec.kind == "named") {
        if (spec.name == "discrete") return CongruencePartition::discrete(rg.regions.size());
        if (spec.name == "full") return CongruencePartition::full(rg.regions.size());
        throw InputError("named congruence '" + spec.name + "' is not available here");
    }
    if (spec.kind == "generators") {
        std::vector<ElementPair> gens;
        for (const auto& [a, b] : spec.pairs) gens.emplace_back(lookup(a), lookup(b));
        return congruence_closure(lat, gens);
    }
    const std::size_t none = rg.regions.size();
    std::vector<std::size_t> labels(rg.regions.size(), none);
    for (std::size_t c = 0; c < spec.classes.size(); ++c) {
        for (const auto& r : spec.classes[c]) {
            auto i = lookup(r);
            if (labels[i] != none) throw InputError("region " + r.str() + " appears in two classes");
            labels[i] = c;
        }
    }
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == none) throw InputError("region " + rg.regions[i].str() + " is in no class");
    auto part = CongruencePartition::from_labels(labels);
    auto check = validate_congruence(lat, part);
    if (!check.ok) throw InputError("partition is not a lattice congruence: " + check.reason);
    return part;
}

std::string sign_vector_list_json(const std::vector<SignVector>& v) {
    json a = json::array();
    for (const auto& s : v) a.push_back(s.str());
    return a.dump();
}

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

std::string graph_to_dot(const std::string& name, const UndirectedGraph& g, const std::vector<std::string>& labels,
                         const std::vector<std::pair<std::size_t, std::size_t>>& highlight) {
    std::set<std::pair<std::size_t, std::size_t>> bold;
    for (auto [a, b] : highlight) bold.insert({std::min(a, b), std::max(a, b)});
    std::ostringstream os;
    os << "graph " << dot_quote(name) << " {\n";
    for (std::size_t v = 0; v < g.size(); ++v) os << "  " << v << " [label=" << dot_quote(labels[v]) << "];\n";
    for (auto [a, b] : g.edges()) {
        os << "  " << a << " -- " << b;
        if (bold.count({a, b})) os << " [penwidth=3]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

std::string poset_to_dot(const std::string& name, const FinitePoset& p, const std::vector<std::string>& labels) {
    std::ostringstream os;
    os << "digraph " << dot_quote(name) << " {\n  rankdir=BT;\n";
    for (std::size_t v = 0; v < p.size(); ++v) os << "  " << v << " [label=" << dot_quote(labels[v]) << "];\n";
    for (auto [a, b] : p.covers()) os << "  " << a << " -> " << b << ";\n";
    os << "}\n";
    return os.str();
}

std::string graph_to_json_string(const UndirectedGraph& g, const std::vector<std::string>& labels) {
    json edges = json::array();
    for (auto [a, b] : g.edges()) edges.push_back({a, b});
    return json{{"vertices", labels}, {"edges", edges}}.dump();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace regiongray
