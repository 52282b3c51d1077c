#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ordpat/format.hpp"
#include "ordpat/girth.hpp"
#include "ordpat/patterns.hpp"
#include "ordpat/reductions.hpp"
#include "ordpat/relcore.hpp"
#include "ordpat/tsil.hpp"

namespace py = pybind11;
using namespace ordpat;

PYBIND11_MODULE(ordpat, m) {
    m.doc() = "Forbidden-pattern ordering/coloring solvers, gadget reductions, and the "
              "temporal sparse incomparability generator";

    py::class_<Symbol>(m, "Symbol")
        .def(py::init<std::string, int>(), py::arg("name"), py::arg("arity"))
        .def_readonly("name", &Symbol::name)
        .def_readonly("arity", &Symbol::arity);

    py::class_<Signature>(m, "Signature")
        .def(py::init([](const std::vector<std::pair<std::string, int>>& symbols) {
                 Signature sig;
                 for (const auto& [name, arity] : symbols)
                     sig.symbols.push_back(Symbol{name, arity});
                 sig.validate();
                 return sig;
             }),
             py::arg("symbols"))
        .def_property_readonly("symbols",
                               [](const Signature& s) {
                                   std::vector<std::pair<std::string, int>> out;
                                   for (const auto& sym : s.symbols)
                                       out.emplace_back(sym.name, sym.arity);
                                   return out;
                               })
        .def("max_arity", &Signature::max_arity);

    py::class_<RelStructure>(m, "RelStructure")
        .def(py::init<Signature, int>(), py::arg("signature"), py::arg("size"))
        .def_property_readonly("signature", &RelStructure::signature)
        .def_property_readonly("size", &RelStructure::size)
        .def("add_tuple", &RelStructure::add_tuple, py::arg("symbol"), py::arg("values"))
        .def("has_tuple", &RelStructure::has_tuple)
        .def("tuples", &RelStructure::tuples, py::arg("symbol"))
        .def("tuple_count", &RelStructure::tuple_count)
        .def("__eq__", [](const RelStructure& a, const RelStructure& b) { return a == b; })
        .def("__repr__", [](const RelStructure& s) { return serialize(s); });

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("size"))
        .def_property_readonly("size", &Graph::size)
        .def_property_readonly("edges", &Graph::edges)
        .def("add_edge", &Graph::add_edge)
        .def("adjacent", &Graph::adjacent)
        .def("degree", &Graph::degree)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) { return serialize(g); });

    py::class_<OrderedGraph>(m, "OrderedGraph")
        .def(py::init([](Graph g, std::vector<int> positions) {
                 OrderedGraph og{std::move(g), std::move(positions)};
                 og.validate();
                 return og;
             }),
             py::arg("graph"), py::arg("positions"))
        .def_readonly("graph", &OrderedGraph::graph)
        .def_readonly("positions", &OrderedGraph::positions)
        .def("vertices_in_order", &OrderedGraph::vertices_in_order)
        .def("__repr__", [](const OrderedGraph& g) { return serialize(g); });

    py::class_<ColoredGraph>(m, "ColoredGraph")
        .def(py::init([](Graph g, std::vector<std::string> palette, std::vector<int> colors) {
                 ColoredGraph cg{std::move(g), std::move(palette), std::move(colors)};
                 cg.normalize();
                 cg.validate();
                 return cg;
             }),
             py::arg("graph"), py::arg("palette"), py::arg("colors"))
        .def_readonly("graph", &ColoredGraph::graph)
        .def_readonly("palette", &ColoredGraph::palette)
        .def_readonly("colors", &ColoredGraph::colors)
        .def("__repr__", [](const ColoredGraph& g) { return serialize(g); });

    py::class_<RankPattern>(m, "RankPattern")
        .def(py::init([](std::vector<int> ranks) {
                 RankPattern p{std::move(ranks)};
                 if (!p.canonical())
                     throw std::invalid_argument("rank pattern not canonical");
                 return p;
             }),
             py::arg("ranks"))
        .def_static("of_values", &RankPattern::of_values)
        .def_readonly("ranks", &RankPattern::ranks)
        .def("repeat_free", &RankPattern::repeat_free)
        .def("__eq__", [](const RankPattern& a, const RankPattern& b) { return a == b; })
        .def("__repr__", [](const RankPattern& p) {
            std::string out = "RankPattern([";
            for (size_t i = 0; i < p.ranks.size(); ++i)
                out += (i ? "," : "") + std::to_string(p.ranks[i]);
            return out + "])";
        });

    py::class_<TemporalStructure>(m, "TemporalStructure")
        .def(py::init<Signature>(), py::arg("signature"))
        .def_property_readonly("signature", &TemporalStructure::signature)
        .def("add_allowed", &TemporalStructure::add_allowed)
        .def("allowed", &TemporalStructure::allowed, py::arg("symbol"))
        .def("allows", &TemporalStructure::allows)
        .def("__repr__", [](const TemporalStructure& t) { return serialize(t); });

    py::class_<WeakOrderWitness>(m, "WeakOrderWitness")
        .def(py::init([](std::vector<int> ranks) {
                 WeakOrderWitness w{std::move(ranks)};
                 w.validate();
                 return w;
             }),
             py::arg("ranks"))
        .def_readonly("ranks", &WeakOrderWitness::ranks)
        .def("linear", &WeakOrderWitness::linear);

    py::class_<Hypergraph3>(m, "Hypergraph3")
        .def(py::init([](int size) {
                 Hypergraph3 h;
                 h.size = size;
                 return h;
             }),
             py::arg("size"))
        .def_readonly("size", &Hypergraph3::size)
        .def_readonly("hyperedges", &Hypergraph3::hyperedges)
        .def("add_hyperedge", &Hypergraph3::add_hyperedge)
        .def("__repr__", [](const Hypergraph3& h) { return serialize(h); });

    py::class_<BlowUp>(m, "BlowUp")
        .def_readonly("structure", &BlowUp::structure)
        .def_readonly("projection", &BlowUp::projection);

    py::class_<StructCycle>(m, "StructCycle")
        .def_readonly("elements", &StructCycle::elements)
        .def("length", &StructCycle::length);

    py::class_<TsilParams>(m, "TsilParams")
        .def_readonly("g", &TsilParams::g)
        .def_readonly("delta", &TsilParams::delta)
        .def_readonly("delta_max", &TsilParams::delta_max)
        .def_readonly("p", &TsilParams::p)
        .def_readonly("n", &TsilParams::n)
        .def_readonly("n_exact", &TsilParams::n_exact)
        .def_readonly("n_formula", &TsilParams::n_formula);

    py::class_<SilInstance>(m, "SilInstance")
        .def_readonly("source", &SilInstance::source)
        .def_readonly("blown", &SilInstance::blown)
        .def_readonly("projection", &SilInstance::projection)
        .def_readonly("params", &SilInstance::params)
        .def_readonly("seed", &SilInstance::seed)
        .def_readonly("tuples_sampled", &SilInstance::tuples_sampled)
        .def("validate", &SilInstance::validate)
        .def("__repr__", [](const SilInstance& i) { return serialize(i); });

    py::class_<StructureVerdict>(m, "StructureVerdict")
        .def_readonly("no", &StructureVerdict::no)
        .def_readonly("structure", &StructureVerdict::structure);

    py::class_<TransferResult>(m, "TransferResult")
        .def_readonly("witness", &TransferResult::witness)
        .def_readonly("resamples", &TransferResult::resamples);

    // relcore operations
    m.def("max_degree", &max_degree);
    m.def("hom_exists", &hom_exists, py::arg("a"), py::arg("b"), py::arg("injective") = false);
    m.def("is_homomorphism", &is_homomorphism);
    m.def("temporal_tuple_allowed", &temporal_tuple_allowed);
    m.def("temporal_hom_exists", &temporal_hom_exists);
    m.def("witness_valid", &witness_valid);
    m.def("linearize_witness", &linearize_witness);
    m.def("blow_up", &blow_up);
    m.def("all_rank_patterns", &all_rank_patterns);

    // girth
    m.def("girth", [](const RelStructure& s) { return girth(s); });
    m.def("shortest_cycle", &shortest_cycle);
    m.def("raise_girth", &raise_girth);

    // patterns
    m.def("ordered_occurs", &ordered_occurs, py::arg("g"), py::arg("f"),
          py::arg("induced") = false);
    m.def("solve_ordering", &solve_ordering, py::arg("graph"), py::arg("family"),
          py::arg("induced") = false);
    m.def("supergraph_closure", &supergraph_closure);
    m.def("colored_occurs",
          py::overload_cast<const ColoredGraph&, const ColoredGraph&>(&colored_occurs));
    m.def("solve_coloring",
          py::overload_cast<const Graph&, const std::vector<std::string>&,
                            const std::vector<ColoredGraph>&>(&solve_coloring),
          py::arg("graph"), py::arg("palette"), py::arg("family"));
    m.def("subgraph_occurs", &subgraph_occurs);

    // reductions
    m.def("triangles_to_nae", &triangles_to_nae);
    m.def("nae_to_triangles", &nae_to_triangles);
    m.def("hypergraph_as_structure", &hypergraph_as_structure);
    m.def("patterns_to_temporal", &patterns_to_temporal);
    m.def("graph_to_temporal_instance", &graph_to_temporal_instance);
    m.def("structure_to_graph", [](const RelStructure& t) {
        RootedGraph rg = structure_to_graph(t);
        return py::make_tuple(rg.graph, rg.base_size);
    });
    m.def("graph_to_structure", &graph_to_structure);
    m.def("star", &star);
    m.def("unstar", [](const Graph& g, int colors, int mm) {
        UnstarResult r = unstar(g, colors, mm);
        switch (r.verdict) {
            case UnstarResult::Verdict::yes: return py::object(py::str("yes"));
            case UnstarResult::Verdict::no: return py::object(py::str("no"));
            default: return py::object(py::cast(r.remainder));
        }
    });

    // tsil
    m.def("fubini", &fubini);
    m.def("tsil_parameters", &tsil_parameters, py::arg("b"), py::arg("g"),
          py::arg("n_override") = std::nullopt);
    m.def("generate", &generate);
    m.def("transfer", &transfer);
    m.def("extract_intervals", &extract_intervals);

    // format
    m.def("parse_artifact", [](const std::string& text) {
        return std::visit([](auto&& x) { return py::cast(std::move(x)); },
                          parse_artifact(text));
    });
    m.def("serialize_graph", [](const Graph& g) { return serialize(g); });
    m.def("serialize_structure", [](const RelStructure& s) { return serialize(s); });
    m.def("serialize_temporal", [](const TemporalStructure& t) { return serialize(t); });
}
