#include "ordpat/format.hpp"

#include <algorithm>

#include "json.hpp"

namespace ordpat {

namespace {

using Json = nlohmann::ordered_json;

int line_of(const std::string& text, size_t byte) {
    int line = 1;
    for (size_t i = 0; i < byte && i < text.size(); ++i)
        if (text[i] == '\n') ++line;
    return line;
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what(), line_of(text, e.byte));
    }
}

std::string dump(const Json& j) {
    return j.dump() + "\n";
}

const Json& field(const Json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw ParseError(std::string("missing field ") + name);
    return *it;
}

std::string kind_of(const Json& j) {
    if (!j.is_object()) throw ParseError("expected an object with a kind field");
    return field(j, "kind").get<std::string>();
}

void expect_kind(const Json& j, const std::string& kind) {
    if (kind_of(j) != kind)
        throw ParseError("expected kind " + kind + ", got " + kind_of(j));
}

// ---- per-kind encoders ----

Json graph_json(const Graph& g) {
    Json j;
    j["kind"] = "graph";
    j["size"] = g.size();
    j["edges"] = Json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    return j;
}

Graph graph_from(const Json& j) {
    Graph g(field(j, "size").get<int>());
    for (const auto& e : field(j, "edges")) {
        if (!e.is_array() || e.size() != 2) throw ParseError("edge must be a pair");
        int u = e[0].get<int>(), v = e[1].get<int>();
        try {
            if (!g.add_edge(u, v))
                throw ParseError("duplicate edge [" + std::to_string(u) + "," + std::to_string(v) + "]");
        } catch (const std::invalid_argument& err) {
            throw ParseError(std::string(err.what()) + " [" + std::to_string(u) + "," +
                             std::to_string(v) + "]");
        }
    }
    return g;
}

Json signature_json(const Signature& sig) {
    Json arr = Json::array();
    for (const auto& s : sig.symbols) arr.push_back({{"name", s.name}, {"arity", s.arity}});
    return arr;
}

Signature signature_from(const Json& j) {
    Signature sig;
    for (const auto& s : j)
        sig.symbols.push_back(Symbol{field(s, "name").get<std::string>(),
                                     field(s, "arity").get<int>()});
    sig.validate();
    return sig;
}

Json structure_json(const RelStructure& s) {
    Json j;
    j["kind"] = "structure";
    j["signature"] = signature_json(s.signature());
    j["size"] = s.size();
    Json tuples = Json::object();
    for (int sym = 0; sym < s.symbol_count(); ++sym) {
        Json arr = Json::array();
        for (const auto& t : s.tuples(sym)) arr.push_back(t);
        tuples[s.signature().symbols[sym].name] = std::move(arr);
    }
    j["tuples"] = std::move(tuples);
    return j;
}

std::string tuple_str(const Tuple& t) {
    std::string out = "[";
    for (size_t i = 0; i < t.size(); ++i) out += (i ? "," : "") + std::to_string(t[i]);
    return out + "]";
}

RelStructure structure_from(const Json& j) {
    RelStructure s(signature_from(field(j, "signature")), field(j, "size").get<int>());
    const Json& tuples = field(j, "tuples");
    for (auto it = tuples.begin(); it != tuples.end(); ++it) {
        int sym = s.signature().index_of(it.key());
        if (sym < 0) throw ParseError("tuples for unknown symbol " + it.key());
        for (const auto& tj : it.value()) {
            Tuple t = tj.get<Tuple>();
            try {
                if (!s.add_tuple(sym, t))
                    throw ParseError("duplicate tuple " + tuple_str(t) + " in " + it.key());
            } catch (const std::invalid_argument& err) {
                throw ParseError(std::string(err.what()) + ", tuple " + tuple_str(t));
            }
        }
    }
    return s;
}

Json ordered_graph_json(const OrderedGraph& g) {
    Json j = graph_json(g.graph);
    j["kind"] = "ordered_graph";
    j["positions"] = g.positions;
    return j;
}

OrderedGraph ordered_graph_from(const Json& j) {
    OrderedGraph g{graph_from(j), field(j, "positions").get<std::vector<int>>()};
    g.validate();
    return g;
}

Json colored_graph_json(const ColoredGraph& g) {
    Json j = graph_json(g.graph);
    j["kind"] = "colored_graph";
    j["palette"] = g.palette;
    Json colors = Json::array();
    for (int c : g.colors) colors.push_back(g.palette.at(c));
    j["colors"] = std::move(colors);
    return j;
}

ColoredGraph colored_graph_from(const Json& j) {
    ColoredGraph g;
    g.graph = graph_from(j);
    g.palette = field(j, "palette").get<std::vector<std::string>>();
    std::vector<std::string> names = field(j, "colors").get<std::vector<std::string>>();
    if (static_cast<int>(names.size()) != g.graph.size())
        throw ParseError("colored graph: every vertex needs a color");
    std::vector<std::string> sorted = g.palette;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& name : names) {
        if (!std::binary_search(sorted.begin(), sorted.end(), name))
            throw ParseError("color " + name + " outside palette");
        g.colors.push_back(0);  // remapped by normalize below
    }
    g.palette = sorted;
    for (size_t v = 0; v < names.size(); ++v) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), names[v]);
        g.colors[v] = static_cast<int>(it - sorted.begin());
    }
    g.validate();
    return g;
}

Json temporal_json(const TemporalStructure& t) {
    Json j;
    j["kind"] = "temporal";
    j["signature"] = signature_json(t.signature());
    Json allowed = Json::object();
    for (int sym = 0; sym < t.symbol_count(); ++sym) {
        Json arr = Json::array();
        for (const auto& p : t.allowed(sym)) arr.push_back(p.ranks);
        allowed[t.signature().symbols[sym].name] = std::move(arr);
    }
    j["allowed"] = std::move(allowed);
    return j;
}

TemporalStructure temporal_from(const Json& j) {
    TemporalStructure t(signature_from(field(j, "signature")));
    const Json& allowed = field(j, "allowed");
    for (auto it = allowed.begin(); it != allowed.end(); ++it) {
        int sym = t.signature().index_of(it.key());
        if (sym < 0) throw ParseError("allowed patterns for unknown symbol " + it.key());
        for (const auto& pj : it.value()) {
            RankPattern p{pj.get<std::vector<int>>()};
            try {
                if (!t.add_allowed(sym, p))
                    throw ParseError("duplicate pattern " + tuple_str(p.ranks) + " in " + it.key());
            } catch (const std::invalid_argument& err) {
                throw ParseError(std::string(err.what()) + ", pattern " + tuple_str(p.ranks));
            }
        }
    }
    return t;
}

Json hypergraph_json(const Hypergraph3& h) {
    Json j;
    j["kind"] = "hypergraph3";
    j["size"] = h.size;
    j["hyperedges"] = Json::array();
    for (const auto& e : h.hyperedges) j["hyperedges"].push_back({e[0], e[1], e[2]});
    return j;
}

Hypergraph3 hypergraph_from(const Json& j) {
    Hypergraph3 h;
    h.size = field(j, "size").get<int>();
    for (const auto& ej : field(j, "hyperedges")) {
        if (!ej.is_array() || ej.size() != 3) throw ParseError("hyperedge must be a 3-set");
        Tuple e = ej.get<Tuple>();
        try {
            if (!h.add_hyperedge(e[0], e[1], e[2]))
                throw ParseError("duplicate hyperedge " + tuple_str(e));
        } catch (const std::invalid_argument& err) {
            throw ParseError(std::string(err.what()) + " " + tuple_str(e));
        }
    }
    return h;
}

Json witness_json(const WeakOrderWitness& w) {
    Json j;
    j["kind"] = "weak_order_witness";
    j["ranks"] = w.ranks;
    return j;
}

Json colored_structure_json(const ColoredStructure& s) {
    Json j = structure_json(s.structure);
    j["kind"] = "colored_structure";
    j["palette"] = s.palette;
    Json colors = Json::array();
    for (int c : s.colors) colors.push_back(s.palette.at(c));
    j["colors"] = std::move(colors);
    return j;
}

ColoredStructure colored_structure_from(const Json& j) {
    ColoredStructure s;
    s.structure = structure_from(j);
    s.palette = field(j, "palette").get<std::vector<std::string>>();
    std::vector<std::string> names = field(j, "colors").get<std::vector<std::string>>();
    std::sort(s.palette.begin(), s.palette.end());
    s.palette.erase(std::unique(s.palette.begin(), s.palette.end()), s.palette.end());
    for (const auto& name : names) {
        auto it = std::lower_bound(s.palette.begin(), s.palette.end(), name);
        if (it == s.palette.end() || *it != name)
            throw ParseError("color " + name + " outside palette");
        s.colors.push_back(static_cast<int>(it - s.palette.begin()));
    }
    s.validate();
    return s;
}

Json sil_instance_json(const SilInstance& inst) {
    Json j;
    j["kind"] = "sil_instance";
    j["source"] = structure_json(inst.source);
    j["blown"] = structure_json(inst.blown);
    j["projection"] = inst.projection;
    j["seed"] = inst.seed;
    j["tuples_sampled"] = inst.tuples_sampled;
    Json params;
    params["girth"] = inst.params.g;
    params["n"] = inst.params.n;
    params["n_exact"] = inst.params.n_exact;
    params["n_formula"] = inst.params.n_formula;
    params["delta"] = inst.params.delta;
    params["delta_max"] = inst.params.delta_max;
    params["p"] = inst.params.p;
    j["params"] = std::move(params);
    return j;
}

SilInstance sil_instance_from(const Json& j) {
    SilInstance inst;
    inst.source = structure_from(field(j, "source"));
    inst.blown = structure_from(field(j, "blown"));
    inst.projection = field(j, "projection").get<std::vector<int>>();
    inst.seed = field(j, "seed").get<uint64_t>();
    inst.tuples_sampled = field(j, "tuples_sampled").get<long long>();
    const Json& params = field(j, "params");
    inst.params.g = field(params, "girth").get<int>();
    inst.params.n = field(params, "n").get<uint64_t>();
    inst.params.n_exact = field(params, "n_exact").get<bool>();
    inst.params.n_formula = field(params, "n_formula").get<std::string>();
    inst.params.delta = field(params, "delta").get<double>();
    inst.params.delta_max = field(params, "delta_max").get<double>();
    inst.params.p = field(params, "p").get<std::vector<double>>();
    inst.validate();
    return inst;
}

}  // namespace

Artifact parse_artifact(const std::string& text) {
    Json j = parse_json(text);
    const std::string kind = kind_of(j);
    if (kind == "graph") return graph_from(j);
    if (kind == "ordered_graph") return ordered_graph_from(j);
    if (kind == "colored_graph") return colored_graph_from(j);
    if (kind == "structure") return structure_from(j);
    if (kind == "temporal") return temporal_from(j);
    if (kind == "hypergraph3") return hypergraph_from(j);
    throw ParseError("unknown kind " + kind);
}

std::string artifact_kind(const Artifact& a) {
    switch (a.index()) {
        case 0: return "graph";
        case 1: return "ordered_graph";
        case 2: return "colored_graph";
        case 3: return "structure";
        case 4: return "temporal";
        default: return "hypergraph3";
    }
}

std::string serialize(const Graph& g) { return dump(graph_json(g)); }
std::string serialize(const OrderedGraph& g) { return dump(ordered_graph_json(g)); }
std::string serialize(const ColoredGraph& g) { return dump(colored_graph_json(g)); }
std::string serialize(const RelStructure& s) { return dump(structure_json(s)); }
std::string serialize(const TemporalStructure& t) { return dump(temporal_json(t)); }
std::string serialize(const Hypergraph3& h) { return dump(hypergraph_json(h)); }
std::string serialize(const WeakOrderWitness& w) { return dump(witness_json(w)); }
std::string serialize(const ColoredStructure& s) { return dump(colored_structure_json(s)); }
std::string serialize(const SilInstance& inst) { return dump(sil_instance_json(inst)); }

std::string serialize(const Artifact& a) {
    return std::visit([](const auto& x) { return serialize(x); }, a);
}

std::string serialize_ordered_family(const std::vector<OrderedGraph>& family) {
    Json j;
    j["kind"] = "ordered_family";
    j["members"] = Json::array();
    for (const auto& f : family) j["members"].push_back(ordered_graph_json(f));
    return dump(j);
}

std::string serialize_colored_family(const std::vector<ColoredGraph>& family) {
    Json j;
    j["kind"] = "colored_family";
    j["members"] = Json::array();
    for (const auto& f : family) j["members"].push_back(colored_graph_json(f));
    return dump(j);
}

Graph parse_graph(const std::string& text) {
    Json j = parse_json(text);
    expect_kind(j, "graph");
    return graph_from(j);
}

OrderedGraph parse_ordered_graph(const std::string& text) {
    Json j = parse_json(text);
    expect_kind(j, "ordered_graph");
    return ordered_graph_from(j);
}

ColoredGraph parse_colored_graph(const std::string& text) {
    Json j = parse_json(text);
    expect_kind(j, "colored_graph");
    return colored_graph_from(j);
}

RelStructure parse_structure(const std::string& text) {
    Json j = parse_json(text);
    expect_kind(j, "structure");
    return structure_from(j);
}

TemporalStructure parse_temporal(const std::string& text) {
    Json j = parse_json(text);
    expect_kind(j, "temporal");
    return temporal_from(j);
}

Hypergraph3 parse_hypergraph(const std::string& text) {
    Json j = parse_json(text);
    expect_kind(j, "hypergraph3");
    return hypergraph_from(j);
}

WeakOrderWitness parse_witness(const std::string& text) {
    Json j = parse_json(text);
    expect_kind(j, "weak_order_witness");
    WeakOrderWitness w{field(j, "ranks").get<std::vector<int>>()};
    w.validate();
    return w;
}

ColoredStructure parse_colored_structure(const std::string& text) {
    Json j = parse_json(text);
    expect_kind(j, "colored_structure");
    return colored_structure_from(j);
}

SilInstance parse_sil_instance(const std::string& text) {
    Json j = parse_json(text);
    expect_kind(j, "sil_instance");
    return sil_instance_from(j);
}

std::vector<OrderedGraph> parse_ordered_family(const std::string& text) {
    Json j = parse_json(text);
    expect_kind(j, "ordered_family");
    std::vector<OrderedGraph> out;
    for (const auto& m : field(j, "members")) out.push_back(ordered_graph_from(m));
    return out;
}

std::vector<ColoredGraph> parse_colored_family(const std::string& text) {
    Json j = parse_json(text);
    expect_kind(j, "colored_family");
    std::vector<ColoredGraph> out;
    for (const auto& m : field(j, "members")) out.push_back(colored_graph_from(m));
    return out;
}

}  // namespace ordpat
