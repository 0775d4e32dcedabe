#include "regiongray/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "json.hpp"
#include "regiongray/coxeter.hpp"
#include "regiongray/errors.hpp"
#include "regiongray/formats.hpp"
#include "regiongray/graphic.hpp"
#include "regiongray/lattice.hpp"
#include "regiongray/triangulation.hpp"
#include "regiongray/zigzag.hpp"

namespace regiongray {
namespace {

using nlohmann::json;

class ValidationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string family;
    int n = -1;
    std::string input;
    std::string congruence;
    std::string base;
    std::string format = "text";
    bool cyclic = false;
    bool path = false;
    std::string method = "loopless";
    std::string over;
    std::string graph;
    std::string listing;
};

const std::vector<std::string> kFamilies = {"binary",         "perm",     "signed-perm", "acyclic", "signed-acyclic",
                                            "sym-triangulation", "quotient", "custom-arrangement"};

int need_n(const Options& o, int lo, int hi) {
    if (o.n < lo || o.n > hi)
        throw InputError("--n must be between " + std::to_string(lo) + " and " + std::to_string(hi) + " for family " +
                         o.family);
    return o.n;
}

std::string chain_text(const SupersolvableChain& chain) {
    std::string s;
    for (const auto& level : chain.levels) {
        s += '[';
        for (std::size_t i = 0; i < level.size(); ++i) {
            if (i) s += ' ';
            s += std::to_string(level[i]);
        }
        s += ']';
    }
    return s;
}

// A family backed by a supersolvable arrangement, with its object text format.
struct Context {
    std::string family;
    int n = 0;
    std::optional<HyperplaneArrangement> arr;
    SupersolvableChain chain;
    RegionGraph rg;
    SignVector base;
    std::optional<SignedGraph> graph;
    std::string description;
    bool standard_chain = false;

    std::string format(const SignVector& r) const {
        if (family == "binary") return region_to_bits(r);
        if (family == "perm") return format_permutation(region_to_permutation(r, n));
        if (family == "signed-perm") return format_permutation(region_to_signed_permutation(r, n));
        if (graph) return format_orientation(*graph, region_to_orientation(*graph, r));
        return r.str();
    }

    SignVector parse(std::string_view text) const {
        SignVector r;
        if (family == "binary") {
            if (static_cast<int>(text.size()) != n) throw InputError("expected " + std::to_string(n) + " bits");
            r = bits_to_region(text);
        } else if (family == "perm") {
            auto p = parse_permutation(text);
            if (static_cast<int>(p.size()) != n || !is_permutation(p)) throw InputError("not a permutation of 1.." + std::to_string(n));
            r = permutation_to_region(p);
        } else if (family == "signed-perm") {
            auto w = parse_permutation(text);
            if (static_cast<int>(w.size()) != n || !is_signed_permutation(w))
                throw InputError("not a signed permutation of 1.." + std::to_string(n));
            r = signed_permutation_to_region(w);
        } else if (graph) {
            r = orientation_to_region(*graph, parse_orientation(*graph, text));
        } else {
            try {
                r = SignVector::parse(text);
            } catch (const std::exception& e) {
                throw InputError(std::string("bad sign string: ") + e.what());
            }
        }
        if (!rg.find(r)) throw InputError("'" + std::string(text) + "' is not a region");
        return r;
    }

    std::vector<std::string> labels() const {
        std::vector<std::string> out;
        for (const auto& r : rg.regions) out.push_back(format(r));
        return out;
    }
};

bool is_sign_string(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c == '+' || c == '-'; });
}

SignedGraph load_graph(const Options& o, bool allow_negative) {
    if (o.input.empty()) throw InputError("family " + o.family + " needs --input with a graph JSON file");
    auto g = parse_graph_json(read_file(o.input));
    if (!allow_negative && g.is_signed()) throw InputError("family acyclic takes unsigned graphs; use signed-acyclic");
    return g;
}

Context build_context(const std::string& family, const Options& o) {
    Context ctx;
    ctx.family = family;
    std::optional<ArrangementFamily> fam;
    if (family == "binary") {
        ctx.n = need_n(o, 1, 16);
        fam = coordinate_arrangement(ctx.n);
        ctx.description = "coordinate";
        ctx.standard_chain = true;
    } else if (family == "perm") {
        ctx.n = need_n(o, 2, 8);
        fam = type_a_arrangement(ctx.n);
        ctx.description = "type-A";
        ctx.standard_chain = true;
    } else if (family == "signed-perm") {
        ctx.n = need_n(o, 1, 6);
        fam = type_b_arrangement(ctx.n);
        ctx.description = "type-B";
        ctx.standard_chain = true;
    } else if (family == "acyclic" || family == "signed-acyclic") {
        ctx.graph = load_graph(o, family == "signed-acyclic");
        ctx.n = ctx.graph->vertex_count();
        fam = graph_arrangement(*ctx.graph);
        ctx.description = std::string(family == "acyclic" ? "graphic" : "signed-graphic") +
                          " edges=" + std::to_string(ctx.graph->edge_count());
    } else if (family == "custom-arrangement") {
        if (o.input.empty()) throw InputError("family custom-arrangement needs --input with an arrangement JSON file");
        auto in = parse_arrangement_json(read_file(o.input));
        SupersolvableChain chain;
        if (in.chain) {
            if (!validate_chain(in.arrangement, *in.chain))
                throw InputError("the chain in the input is not a supersolvable chain");
            chain = *in.chain;
        } else {
            auto found = find_supersolvable_chain(in.arrangement);
            if (!found) throw InputError("the arrangement has no supersolvable chain");
            chain = *found;
        }
        ctx.n = in.arrangement.dim();
        ctx.description = "custom dim=" + std::to_string(in.arrangement.dim()) +
                          " hyperplanes=" + std::to_string(in.arrangement.size());
        fam = ArrangementFamily{std::move(in.arrangement), std::move(chain)};
    } else {
        throw InputError("family " + family + " is not backed by an arrangement");
    }
    ctx.arr = std::move(fam->arrangement);
    ctx.chain = std::move(fam->chain);
    ctx.rg = build_region_graph(*ctx.arr);
    require_within_guard(ctx.rg.size(), "regions");

    if (!o.base.empty()) {
        if (is_sign_string(o.base) && static_cast<std::size_t>(o.base.size()) == ctx.arr->size()) {
            ctx.base = SignVector::parse(o.base);
            if (!ctx.rg.find(ctx.base)) throw InputError("--base is not a region");
        } else {
            ctx.base = ctx.parse(o.base);
        }
    } else if (family == "binary") {
        ctx.base = SignVector(ctx.n, 0);
    } else if (family == "perm") {
        Permutation id;
        for (int v = 1; v <= ctx.n; ++v) id.push_back(v);
        ctx.base = permutation_to_region(id);
    } else if (family == "signed-perm") {
        SignedPermutation id;
        for (int v = 1; v <= ctx.n; ++v) id.push_back(v);
        ctx.base = signed_permutation_to_region(id);
    } else {
        auto bases = canonical_base_regions(ctx.rg, ctx.chain);
        if (bases.empty()) throw StructuralViolation("no canonical base region");
        ctx.base = bases.front();
    }
    return ctx;
}

Listing cycle_listing(const Context& ctx) {
    if (rank(*ctx.arr) >= 2) return ham_cycle_supersolvable(*ctx.arr, ctx.chain, ctx.base);
    return zigzag_cycle(ctx.rg, ctx.chain, ctx.base);
}

std::vector<std::string> context_header(const Context& ctx) {
    std::vector<std::string> h;
    h.push_back("arrangement=" + ctx.description + " chain=" + (ctx.standard_chain ? "standard" : chain_text(ctx.chain)));
    h.push_back("base=" + ctx.format(ctx.base));
    return h;
}

struct Quotient {
    Context ctx;
    FiniteLattice lattice;
    CongruencePartition cong;
    std::string name;
    std::vector<std::size_t> bottoms;
    UndirectedGraph cover;

    std::vector<std::string> labels() const {
        std::vector<std::string> out;
        for (std::size_t b : bottoms) out.push_back(ctx.format(ctx.rg.regions[b]));
        return out;
    }
};

std::vector<ElementPair> named_generators(const Context& ctx, const std::string& name) {
    std::vector<ElementPair> gens;
    if (name == "sylvester") {
        if (ctx.family != "perm") throw InputError("the sylvester congruence lives on the perm lattice");
        for (const auto& [a, b] : sylvester_generators(ctx.n))
            gens.emplace_back(ctx.rg.index_of(permutation_to_region(a)), ctx.rg.index_of(permutation_to_region(b)));
    } else {
        if (ctx.family != "signed-perm") throw InputError("the typeb-sylvester congruence lives on the signed-perm lattice");
        for (const auto& [a, b] : typeb_sylvester_generators(ctx.n))
            gens.emplace_back(ctx.rg.index_of(signed_permutation_to_region(a)),
                              ctx.rg.index_of(signed_permutation_to_region(b)));
    }
    return gens;
}

Quotient build_quotient(const Options& o) {
    if (o.congruence.empty()) throw InputError("family quotient needs --congruence");
    std::optional<CongruenceSpec> spec;
    std::string name = o.congruence;
    const bool named = name == "discrete" || name == "full" || name == "sylvester" || name == "typeb-sylvester";
    if (!named) {
        spec = parse_congruence_json(read_file(o.congruence));
        if (spec->kind == "named") name = spec->name;
    }
    std::string over = o.over;
    if (over.empty()) {
        if (name == "sylvester")
            over = "perm";
        else if (name == "typeb-sylvester")
            over = "signed-perm";
        else
            throw InputError("family quotient needs --over to pick the lattice");
    }
    if (over == "quotient" || over == "sym-triangulation") throw InputError("--over must name an arrangement family");
    Quotient q{build_context(over, o), {}, {}, name, {}, {}};
    q.lattice = make_lattice(poset_of_regions(q.ctx.rg, q.ctx.rg.index_of(q.ctx.base)));
    if (spec && spec->kind != "named") {
        q.cong = resolve_congruence(*spec, q.ctx.rg, q.lattice);
        q.name = o.congruence;
    } else if (name == "sylvester" || name == "typeb-sylvester") {
        q.cong = congruence_closure(q.lattice, named_generators(q.ctx, name));
    } else {
        q.cong = resolve_congruence(CongruenceSpec{"named", name, {}, {}}, q.ctx.rg, q.lattice);
    }
    q.bottoms = class_bottoms(q.lattice, q.cong);
    q.cover = cover_graph(quotient_cover_graph(q.lattice, q.cong));
    return q;
}

bool ends_adjacent(const UndirectedGraph& g, const std::vector<std::size_t>& order) {
    if (order.size() < 2 || order.size() % 2 != 0) return false;
    return g.adjacent(order.front(), order.back());
}

// What generate and verify need from any family.
struct Model {
    std::vector<std::string> header;
    UndirectedGraph graph;
    std::vector<std::string> labels;
    std::function<std::size_t(std::string_view)> locate;  // object text -> vertex, throws InputError
    std::vector<std::size_t> order;
    bool cyclic = false;
};

Model build_model(const Options& o, bool want_listing) {
    Model m;
    if (o.family == "sym-triangulation") {
        int n = need_n(o, 1, 5);
        auto fg = flip_graph(n);
        m.graph = fg.graph;
        for (const auto& t : fg.vertices) m.labels.push_back(format_triangulation(t));
        auto vertices = std::make_shared<std::vector<SymmetricTriangulation>>(fg.vertices);
        m.locate = [vertices, n](std::string_view text) {
            auto t = parse_triangulation(n, text);
            auto it = std::lower_bound(vertices->begin(), vertices->end(), t);
            if (it == vertices->end() || *it != t) throw InputError("unknown triangulation");
            return static_cast<std::size_t>(it - vertices->begin());
        };
        m.header.push_back("arrangement=type-B congruence=typeb-sylvester objects=" + std::to_string(fg.vertices.size()));
        if (want_listing) {
            auto gc = triangulation_gray_code(n);
            for (const auto& t : gc.triangulations) m.order.push_back(m.locate(format_triangulation(t)));
            m.cyclic = gc.cyclic;
        }
        return m;
    }
    if (o.family == "quotient") {
        auto q = std::make_shared<Quotient>(build_quotient(o));
        m.graph = q->cover;
        m.labels = q->labels();
        m.locate = [q](std::string_view text) { return q->cong.class_of[q->ctx.rg.index_of(q->ctx.parse(text))]; };
        m.header = context_header(q->ctx);
        m.header.insert(m.header.begin(), "over=" + q->ctx.family);
        m.header.push_back("congruence=" + q->name + " classes=" + std::to_string(q->cong.size()));
        if (want_listing) {
            m.order = ham_path_quotient(q->ctx.rg, q->ctx.chain, q->ctx.base, q->cong).order;
            m.cyclic = q->cong.size() == 1 ? false : ends_adjacent(m.graph, m.order);
        }
        return m;
    }
    auto ctx = std::make_shared<Context>(build_context(o.family, o));
    m.graph = ctx->rg.graph;
    m.labels = ctx->labels();
    m.locate = [ctx](std::string_view text) { return ctx->rg.index_of(ctx->parse(text)); };
    m.header = context_header(*ctx);
    if (want_listing) {
        auto listing = cycle_listing(*ctx);
        m.order = listing.order;
        m.cyclic = listing.cyclic;
    }
    return m;
}

void write_header(std::ostream& out, const Options& o, const std::vector<std::string>& extra, bool cyclic) {
    out << "# regiongray family=" << o.family;
    if (o.n >= 0 && o.family != "acyclic" && o.family != "signed-acyclic" && o.family != "custom-arrangement") out << " n=" << o.n;
    out << '\n';
    for (const auto& h : extra) out << "# " << h << '\n';
    out << "# cyclic=" << (cyclic ? "true" : "false") << '\n';
}

bool streaming_family(const Options& o) {
    return (o.family == "binary" || o.family == "perm" || o.family == "signed-perm") && o.method == "loopless" &&
           o.base.empty() && o.format != "dot";
}

void check_cycle_request(const Options& o, bool cyclic) {
    if (o.cyclic && !cyclic) throw ValidationFailure("the listing is a Hamiltonian path, not a cycle");
}

int cmd_generate(const Options& o, std::ostream& out) {
    if (streaming_family(o)) {
        const int n = o.family == "binary" ? need_n(o, 1, 64) : need_n(o, 1, o.family == "perm" ? 12 : 10);
        std::string base;
        for (int v = 1; v <= n; ++v) base += (v > 1 ? " " : "") + std::to_string(v);
        if (o.family == "binary") base = std::string(static_cast<std::size_t>(n), '0');
        const bool cyclic = !o.path && !(o.family == "perm" && n == 1);
        const std::string desc = o.family == "binary" ? "coordinate" : (o.family == "perm" ? "type-A" : "type-B");
        json items = json::array();
        auto emit = [&](const std::string& s) {
            if (o.format == "json")
                items.push_back(s);
            else
                out << s << '\n';
        };
        if (o.format != "json") write_header(out, o, {"arrangement=" + desc + " chain=standard", "base=" + base}, cyclic);
        if (o.family == "binary") {
            BrgcGenerator g(n);
            do emit(g.current());
            while (g.next());
        } else if (o.family == "perm") {
            SjtGenerator g(n);
            do emit(format_permutation(g.current()));
            while (g.next());
        } else {
            SignedSjtGenerator g(n);
            do emit(format_permutation(g.window()));
            while (g.next());
        }
        if (o.format == "json") out << json{{"family", o.family}, {"n", n}, {"cyclic", cyclic}, {"objects", items}}.dump() << '\n';
        return 0;
    }
    Model m = build_model(o, true);
    check_cycle_request(o, m.cyclic);
    const bool cyclic = m.cyclic && !o.path;
    if (o.format == "json") {
        json items = json::array();
        for (std::size_t v : m.order) items.push_back(m.labels[v]);
        json j{{"family", o.family}, {"cyclic", cyclic}, {"header", m.header}, {"objects", items}};
        if (o.n >= 0) j["n"] = o.n;
        out << j.dump() << '\n';
    } else if (o.format == "dot") {
        std::vector<std::pair<std::size_t, std::size_t>> steps;
        for (std::size_t i = 0; i + 1 < m.order.size(); ++i) steps.emplace_back(m.order[i], m.order[i + 1]);
        if (cyclic && m.order.size() > 2) steps.emplace_back(m.order.back(), m.order.front());
        out << graph_to_dot(o.family, m.graph, m.labels, steps);
    } else {
        write_header(out, o, m.header, cyclic);
        for (std::size_t v : m.order) out << m.labels[v] << '\n';
    }
    return 0;
}

int cmd_verify(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
    Model m = build_model(o, false);
    std::optional<bool> header_cyclic;
    std::vector<std::size_t> order;
    std::vector<std::size_t> line_of;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (line.find("cyclic=true") != std::string::npos) header_cyclic = true;
            if (line.find("cyclic=false") != std::string::npos) header_cyclic = false;
            continue;
        }
        try {
            order.push_back(m.locate(line));
        } catch (const InputError& e) {
            err << "invalid: line " << line_no << ": " << e.what() << '\n';
            return 1;
        }
        line_of.push_back(line_no);
    }
    const bool cyclic = o.cyclic ? true : (o.path ? false : header_cyclic.value_or(false));
    auto check = verify_listing(m.graph, order, cyclic);
    if (!check.ok) {
        std::size_t at = check.index < line_of.size() ? line_of[check.index] : line_no;
        err << "invalid: line " << at << ": " << check.reason << '\n';
        return 1;
    }
    out << "ok: " << order.size() << " objects, " << (cyclic ? "Hamiltonian cycle" : "Hamiltonian path") << '\n';
    return 0;
}

Integer factorial(int n) {
    Integer f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

int cmd_count(const Options& o, std::ostream& out) {
    Integer count;
    if (o.family == "binary") {
        count = Integer(1) << need_n(o, 1, 4096);
    } else if (o.family == "perm") {
        count = factorial(need_n(o, 1, 4096));
    } else if (o.family == "signed-perm") {
        int n = need_n(o, 1, 4096);
        count = (Integer(1) << n) * factorial(n);
    } else if (o.family == "acyclic" || o.family == "signed-acyclic") {
        auto g = load_graph(o, o.family == "signed-acyclic");
        count = enumerate_regions(graph_hyperplanes(g)).size();
    } else if (o.family == "custom-arrangement") {
        if (o.input.empty()) throw InputError("family custom-arrangement needs --input with an arrangement JSON file");
        count = enumerate_regions(parse_arrangement_json(read_file(o.input)).arrangement).size();
    } else if (o.family == "sym-triangulation") {
        count = enumerate_symmetric_triangulations(need_n(o, 1, 6)).size();
    } else {
        count = build_quotient(o).cong.size();
    }
    if (o.format == "json") {
        json j{{"family", o.family}, {"count", count.str()}};
        if (o.n >= 0) j["n"] = o.n;
        out << j.dump() << '\n';
    } else {
        out << count << '\n';
    }
    return 0;
}

int cmd_export(const Options& o, std::ostream& out) {
    std::string kind = o.graph;
    if (kind.empty()) kind = o.family == "quotient" ? "quotient" : (o.family == "sym-triangulation" ? "flip" : "region");
    const bool as_json = o.format == "json";
    if (kind == "flip") {
        if (o.family != "sym-triangulation") throw InputError("--graph flip needs --family sym-triangulation");
        auto fg = flip_graph(need_n(o, 1, 5));
        std::vector<std::string> labels;
        for (const auto& t : fg.vertices) labels.push_back(format_triangulation(t));
        out << (as_json ? graph_to_json_string(fg.graph, labels) + "\n" : graph_to_dot("flip", fg.graph, labels));
        return 0;
    }
    if (kind == "quotient") {
        if (o.family != "quotient") throw InputError("--graph quotient needs --family quotient");
        auto q = build_quotient(o);
        auto poset = quotient_cover_graph(q.lattice, q.cong);
        auto labels = q.labels();
        if (as_json) {
            out << json{{"vertices", labels}, {"covers", poset.covers()}}.dump() << '\n';
        } else {
            out << poset_to_dot("quotient", poset, labels);
        }
        return 0;
    }
    if (kind != "region" && kind != "hasse") throw InputError("unknown --graph " + kind);
    if (o.family == "quotient" || o.family == "sym-triangulation")
        throw InputError("--graph " + kind + " needs an arrangement family");
    auto ctx = build_context(o.family, o);
    auto labels = ctx.labels();
    if (kind == "region") {
        out << (as_json ? graph_to_json_string(ctx.rg.graph, labels) + "\n" : graph_to_dot("regions", ctx.rg.graph, labels));
    } else {
        auto poset = poset_of_regions(ctx.rg, ctx.rg.index_of(ctx.base));
        if (as_json)
            out << json{{"vertices", labels}, {"covers", poset.covers()}}.dump() << '\n';
        else
            out << poset_to_dot("hasse", poset, labels);
    }
    return 0;
}

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.family == "acyclic" || o.family == "signed-acyclic") {
        auto g = load_graph(o, o.family == "signed-acyclic");
        auto peo = o.family == "acyclic" ? find_peo(g) : find_signed_peo(g);
        if (!peo.found()) {
            err << "no " << (o.family == "acyclic" ? "" : "signed ") << "perfect elimination ordering; stuck on vertices";
            for (int v : peo.stuck) err << ' ' << v;
            err << '\n';
            return 1;
        }
        auto fam = graph_arrangement(g);
        out << "supersolvable: elimination order";
        for (int v : peo.order) out << ' ' << v;
        out << "\nchain " << chain_text(fam.chain) << '\n';
        return 0;
    }
    if (o.family == "custom-arrangement") {
        if (o.input.empty()) throw InputError("check-supersolvable needs --input with an arrangement JSON file");
        auto in = parse_arrangement_json(read_file(o.input));
        if (in.chain) {
            if (!validate_chain(in.arrangement, *in.chain)) {
                err << "not a supersolvable chain: " << chain_text(*in.chain) << '\n';
                return 1;
            }
            out << "supersolvable: chain " << chain_text(*in.chain) << " verified\n";
            return 0;
        }
        auto found = find_supersolvable_chain(in.arrangement);
        if (!found) {
            err << "not supersolvable: no chain of modular splits exists\n";
            return 1;
        }
        out << "supersolvable: chain " << chain_text(*found) << '\n';
        return 0;
    }
    if (o.family == "binary" || o.family == "perm" || o.family == "signed-perm") {
        auto ctx = build_context(o.family, o);
        if (!validate_chain(*ctx.arr, ctx.chain)) throw StructuralViolation("standard chain failed validation");
        out << "supersolvable: chain " << chain_text(ctx.chain) << " verified\n";
        return 0;
    }
    throw InputError("check-supersolvable does not apply to family " + o.family);
}

void add_common(CLI::App* sub, Options& o) {
    sub->add_option("--family", o.family, "object family")->required()->check(CLI::IsMember(kFamilies));
    sub->add_option("--n", o.n, "size parameter");
    sub->add_option("--input", o.input, "graph or arrangement JSON file");
    sub->add_option("--congruence", o.congruence, "discrete, full, sylvester, typeb-sylvester or a JSON file");
    sub->add_option("--over", o.over, "arrangement family underlying a quotient")
        ->check(CLI::IsMember(kFamilies));
    sub->add_option("--base", o.base, "base region as a sign string or object");
    sub->add_option("--format", o.format, "text, json or dot")->check(CLI::IsMember({"text", "json", "dot"}));
    auto* cyc = sub->add_flag("--cyclic", o.cyclic, "require or check a cycle");
    auto* pth = sub->add_flag("--path", o.path, "treat the listing as a path");
    cyc->excludes(pth);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Gray codes from supersolvable hyperplane arrangements", "regiongray"};
    app.require_subcommand(1);
    Options o;
    auto* gen = app.add_subcommand("generate", "list all objects of a family as a Gray code");
    auto* ver = app.add_subcommand("verify", "check a listing against the family's graph");
    auto* cnt = app.add_subcommand("count", "count the objects of a family");
    auto* exp = app.add_subcommand("export", "write a graph as DOT or JSON");
    auto* chk = app.add_subcommand("check-supersolvable", "validate or find a supersolvable chain");
    for (auto* sub : {gen, ver, cnt, exp, chk}) add_common(sub, o);
    gen->add_option("--method", o.method, "loopless or zigzag for binary, perm and signed-perm")
        ->check(CLI::IsMember({"loopless", "zigzag"}));
    ver->add_option("--listing", o.listing, "listing file (default: standard input)");
    exp->add_option("--graph", o.graph, "region, hasse, quotient or flip")
        ->check(CLI::IsMember({"region", "hasse", "quotient", "flip"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (gen->parsed()) return cmd_generate(o, out);
        if (ver->parsed()) {
            if (o.listing.empty()) return cmd_verify(o, std::cin, out, err);
            std::ifstream in(o.listing);
            if (!in) throw InputError("cannot read " + o.listing);
            return cmd_verify(o, in, out, err);
        }
        if (cnt->parsed()) return cmd_count(o, out);
        if (exp->parsed()) return cmd_export(o, out);
        return cmd_check(o, out, err);
    } catch (const ValidationFailure& e) {
        err << "invalid: " << e.what() << '\n';
        return 1;
    } catch (const StructuralViolation& e) {
        err << "structural violation: " << e.what() << '\n';
        return 1;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace regiongray
