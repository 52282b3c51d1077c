#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "ordpat/format.hpp"
#include "ordpat/girth.hpp"
#include "ordpat/patterns.hpp"
#include "ordpat/reductions.hpp"
#include "ordpat/relcore.hpp"
#include "ordpat/tsil.hpp"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

struct Options {
    std::string format = "text";
    uint64_t seed = 0;
    long long budget = 10'000'000;
};

bool machine(const Options& opt) { return opt.format == "machine"; }

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& doc, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << doc;
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        out << doc;
    }
}

int report_decision(const Options& opt, const std::string& command, bool yes,
                    const std::string& witness_doc) {
    if (machine(opt)) {
        Json j;
        j["kind"] = "report";
        j["command"] = command;
        j["result"] = yes ? "yes" : "no";
        if (yes && !witness_doc.empty()) j["witness"] = Json::parse(witness_doc);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << (yes ? "YES" : "NO") << "\n";
        if (yes && !witness_doc.empty()) std::cout << witness_doc;
    }
    return yes ? kExitYes : kExitNo;
}

std::vector<uint64_t> parse_seed_range(const std::string& spec) {
    auto dots = spec.find("..");
    if (dots == std::string::npos) return {std::stoull(spec)};
    uint64_t a = std::stoull(spec.substr(0, dots));
    uint64_t b = std::stoull(spec.substr(dots + 2));
    if (b < a) throw std::runtime_error("bad seed range " + spec);
    std::vector<uint64_t> seeds;
    for (uint64_t s = a; s <= b; ++s) seeds.push_back(s);
    return seeds;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"forbidden-pattern ordering/coloring solvers, gadget reductions, "
                 "and the temporal sparse incomparability generator"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "machine"}))
        ->capture_default_str();
    app.add_option("--seed", opt.seed, "Random seed")->capture_default_str();
    app.add_option("--budget", opt.budget, "Search-space cap for verification sweeps")
        ->capture_default_str();

    // fubini
    int fubini_n = 0;
    auto* cmd_fubini = app.add_subcommand("fubini", "Weak orderings of an n-set");
    cmd_fubini->add_option("n", fubini_n, "Set size")->required();

    // girth
    std::string girth_structure;
    bool girth_show_cycle = false;
    auto* cmd_girth = app.add_subcommand("girth", "Girth of a relational structure");
    cmd_girth->add_option("--structure", girth_structure, "Structure file")->required();
    cmd_girth->add_flag("--show-cycle", girth_show_cycle, "Print a shortest cycle");

    // solve-ordering
    std::string so_graph, so_patterns;
    bool so_induced = false;
    auto* cmd_so = app.add_subcommand("solve-ordering", "Pattern-avoiding vertex order");
    cmd_so->add_option("--graph", so_graph, "Graph file")->required();
    cmd_so->add_option("--patterns", so_patterns, "Ordered family file")->required();
    cmd_so->add_flag("--induced", so_induced, "Match patterns as induced ordered subgraphs");

    // solve-coloring
    std::string sc_graph, sc_patterns, sc_palette;
    auto* cmd_sc = app.add_subcommand("solve-coloring", "Pattern-avoiding vertex coloring");
    cmd_sc->add_option("--graph", sc_graph, "Graph file")->required();
    cmd_sc->add_option("--patterns", sc_patterns, "Colored family file")->required();
    cmd_sc->add_option("--palette", sc_palette, "Comma-separated colors")->required();

    // solve-temporal
    std::string st_structure, st_template;
    bool st_linearize = false;
    auto* cmd_st = app.add_subcommand("solve-temporal", "Weak order into a temporal template");
    cmd_st->add_option("--structure", st_structure, "Structure file")->required();
    cmd_st->add_option("--template", st_template, "Temporal template file")->required();
    cmd_st->add_flag("--linearize", st_linearize, "Refine the witness to a linear order");

    // reduce
    auto* cmd_reduce = app.add_subcommand("reduce", "Gadget reductions");
    cmd_reduce->require_subcommand(1);

    std::string tn_graph, tn_out;
    auto* cmd_tn = cmd_reduce->add_subcommand("triangles-nae", "Hyperedge per triangle");
    cmd_tn->add_option("--graph", tn_graph)->required();
    cmd_tn->add_option("--out", tn_out);

    std::string nt_hyper, nt_out;
    auto* cmd_nt = cmd_reduce->add_subcommand("nae-triangles", "Triangle per hyperedge (girth >= 4)");
    cmd_nt->add_option("--hypergraph", nt_hyper)->required();
    cmd_nt->add_option("--out", nt_out);

    std::string ot_patterns, ot_graph, ot_out_template, ot_out_instance;
    auto* cmd_ot = cmd_reduce->add_subcommand("ordering-temporal",
                                              "Ordering problem as a temporal CSP");
    cmd_ot->add_option("--patterns", ot_patterns)->required();
    cmd_ot->add_option("--graph", ot_graph)->required();
    cmd_ot->add_option("--out-template", ot_out_template)->required();
    cmd_ot->add_option("--out-instance", ot_out_instance)->required();

    std::string sg_structure, sg_out;
    auto* cmd_sg = cmd_reduce->add_subcommand("structure-graph", "Glue gadgets onto tuples");
    cmd_sg->add_option("--structure", sg_structure)->required();
    cmd_sg->add_option("--out", sg_out);

    std::string gs_graph, gs_sig_from, gs_out;
    auto* cmd_gs = cmd_reduce->add_subcommand("graph-structure", "Recover tuples from gadget copies");
    cmd_gs->add_option("--graph", gs_graph)->required();
    cmd_gs->add_option("--signature-from", gs_sig_from, "Structure file providing the signature")
        ->required();
    cmd_gs->add_option("--out", gs_out);

    std::string co_patterns, co_graph, co_out_family, co_out_graph;
    int co_m = 0, co_max_m = 8;
    auto* cmd_co = cmd_reduce->add_subcommand("coloring-ordering",
                                              "Coloring problem as an ordering problem");
    cmd_co->add_option("--patterns", co_patterns, "Colored family file")->required();
    cmd_co->add_option("--graph", co_graph)->required();
    cmd_co->add_option("--m", co_m, "Clique size (default: smallest uncolorable)");
    cmd_co->add_option("--max-m", co_max_m, "Cap for the clique search")->capture_default_str();
    cmd_co->add_option("--out-family", co_out_family)->required();
    cmd_co->add_option("--out-graph", co_out_graph)->required();

    std::string us_graph, us_out;
    int us_colors = 0, us_m = 0;
    auto* cmd_us = cmd_reduce->add_subcommand("unstar", "Strip the clique components");
    cmd_us->add_option("--graph", us_graph)->required();
    cmd_us->add_option("--colors", us_colors)->required();
    cmd_us->add_option("--m", us_m)->required();
    cmd_us->add_option("--out", us_out);

    // gen-tsil
    std::string gt_structure, gt_out;
    int gt_girth = 0;
    std::optional<uint64_t> gt_n;
    auto* cmd_gt = app.add_subcommand("gen-tsil", "Sparse incomparability instance");
    cmd_gt->add_option("--structure", gt_structure)->required();
    cmd_gt->add_option("--girth", gt_girth, "Girth target")->required();
    cmd_gt->add_option("--n", gt_n, "Block size override");
    cmd_gt->add_option("--out", gt_out);

    // verify-tsil
    std::string vt_instance, vt_witness;
    std::optional<double> vt_delta;
    auto* cmd_vt = app.add_subcommand("verify-tsil", "Check instance invariants and spanning");
    cmd_vt->add_option("--instance", vt_instance)->required();
    cmd_vt->add_option("--witness", vt_witness, "Weak order on the blow-up");
    cmd_vt->add_option("--delta", vt_delta, "Spanning threshold (default: instance delta)");

    // trial
    std::string tr_structure, tr_template, tr_seeds = "0..9", tr_out;
    int tr_girth = 3;
    uint64_t tr_n = 0;
    auto* cmd_tr = app.add_subcommand("trial", "Per-seed equivalence trials");
    cmd_tr->add_option("--structure", tr_structure)->required();
    cmd_tr->add_option("--template", tr_template)->required();
    cmd_tr->add_option("--girth", tr_girth)->capture_default_str();
    cmd_tr->add_option("--n", tr_n, "Block size")->required();
    cmd_tr->add_option("--seeds", tr_seeds, "Seed or range a..b")->capture_default_str();
    cmd_tr->add_option("--out", tr_out, "Write the machine report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitError;
    }

    using namespace ordpat;
    try {
        if (cmd_fubini->parsed()) {
            long long v = fubini(fubini_n);
            if (machine(opt))
                std::cout << Json{{"kind", "report"}, {"command", "fubini"}, {"value", v}}.dump()
                          << "\n";
            else
                std::cout << v << "\n";
            return kExitYes;
        }

        if (cmd_girth->parsed()) {
            RelStructure s = parse_structure(slurp(girth_structure));
            auto c = shortest_cycle(s);
            if (machine(opt)) {
                Json j{{"kind", "report"}, {"command", "girth"}};
                j["girth"] = c ? Json(c->length()) : Json(nullptr);
                if (c && girth_show_cycle) {
                    Json cycle;
                    cycle["elements"] = c->elements;
                    cycle["tuples"] = Json::array();
                    for (const auto& r : c->tuples)
                        cycle["tuples"].push_back(
                            {{"symbol", s.signature().symbols[r.symbol].name},
                             {"tuple", s.tuples(r.symbol)[r.index]}});
                    j["cycle"] = std::move(cycle);
                }
                std::cout << j.dump() << "\n";
            } else if (!c) {
                std::cout << "acyclic\n";
            } else {
                std::cout << "girth: " << c->length() << "\n";
                if (girth_show_cycle) {
                    std::cout << "cycle:";
                    for (int i = 0; i < c->length(); ++i) {
                        const auto& r = c->tuples[i];
                        std::cout << " x" << c->elements[i] << " -["
                                  << s.signature().symbols[r.symbol].name << " "
                                  << Json(s.tuples(r.symbol)[r.index]).dump() << "]-";
                    }
                    std::cout << " x" << c->elements[0] << "\n";
                }
            }
            return kExitYes;
        }

        if (cmd_so->parsed()) {
            Graph g = parse_graph(slurp(so_graph));
            auto family = parse_ordered_family(slurp(so_patterns));
            auto order = solve_ordering(g, family, so_induced);
            std::string witness;
            if (order) witness = serialize(OrderedGraph{g, *order});
            return report_decision(opt, "solve-ordering", order.has_value(), witness);
        }

        if (cmd_sc->parsed()) {
            Graph g = parse_graph(slurp(sc_graph));
            auto family = parse_colored_family(slurp(sc_patterns));
            std::vector<std::string> palette;
            {
                std::stringstream ss(sc_palette);
                std::string item;
                while (std::getline(ss, item, ','))
                    if (!item.empty()) palette.push_back(item);
                std::sort(palette.begin(), palette.end());
                palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
            }
            auto coloring = solve_coloring(g, palette, family);
            std::string witness;
            if (coloring) witness = serialize(ColoredGraph{g, palette, *coloring});
            return report_decision(opt, "solve-coloring", coloring.has_value(), witness);
        }

        if (cmd_st->parsed()) {
            RelStructure s = parse_structure(slurp(st_structure));
            TemporalStructure t = parse_temporal(slurp(st_template));
            auto w = temporal_hom_exists(s, t);
            if (w && st_linearize) {
                w = linearize_witness(s, t, *w);
                if (!w) return report_decision(opt, "solve-temporal", false, "");
            }
            std::string witness;
            if (w) witness = serialize(*w);
            return report_decision(opt, "solve-temporal", w.has_value(), witness);
        }

        if (cmd_tn->parsed()) {
            Graph g = parse_graph(slurp(tn_graph));
            emit(serialize(triangles_to_nae(g)), tn_out);
            return kExitYes;
        }

        if (cmd_nt->parsed()) {
            Hypergraph3 h = parse_hypergraph(slurp(nt_hyper));
            emit(serialize(nae_to_triangles(h)), nt_out);
            return kExitYes;
        }

        if (cmd_ot->parsed()) {
            auto family = parse_ordered_family(slurp(ot_patterns));
            Graph g = parse_graph(slurp(ot_graph));
            emit(serialize(patterns_to_temporal(family)), ot_out_template);
            emit(serialize(graph_to_temporal_instance(g, family)), ot_out_instance);
            if (!machine(opt))
                std::cout << "wrote " << ot_out_template << " and " << ot_out_instance << "\n";
            return kExitYes;
        }

        if (cmd_sg->parsed()) {
            RelStructure t = parse_structure(slurp(sg_structure));
            RootedGraph rg = structure_to_graph(t);
            emit(serialize(rg.graph), sg_out);
            if (machine(opt))
                std::cout << Json{{"kind", "report"},
                                  {"command", "structure-graph"},
                                  {"base_size", rg.base_size},
                                  {"size", rg.graph.size()}}
                                 .dump()
                          << "\n";
            else
                std::cerr << "base size " << rg.base_size << ", total " << rg.graph.size() << "\n";
            return kExitYes;
        }

        if (cmd_gs->parsed()) {
            Graph g = parse_graph(slurp(gs_graph));
            Signature sig = parse_structure(slurp(gs_sig_from)).signature();
            StructureVerdict v = graph_to_structure(g, sig);
            if (v.no) {
                if (machine(opt))
                    std::cout << Json{{"kind", "report"},
                                      {"command", "graph-structure"},
                                      {"result", "no"}}
                                     .dump()
                              << "\n";
                else
                    std::cout << "NO (a gadget copy carries an extra edge or pendant)\n";
                return kExitNo;
            }
            emit(serialize(v.structure), gs_out);
            return kExitYes;
        }

        if (cmd_co->parsed()) {
            auto family = parse_colored_family(slurp(co_patterns));
            Graph g = parse_graph(slurp(co_graph));
            if (family.empty()) throw std::runtime_error("coloring-ordering: empty family");
            const auto& palette = family.front().palette;
            int m = co_m > 0 ? co_m : find_min_forbidden_clique(palette, family, co_max_m);
            auto ordered = ordering_family(palette, family, m);
            emit(serialize_ordered_family(ordered), co_out_family);
            emit(serialize(star(g, static_cast<int>(palette.size()), m)), co_out_graph);
            if (machine(opt))
                std::cout << Json{{"kind", "report"},
                                  {"command", "coloring-ordering"},
                                  {"m", m},
                                  {"family_size", ordered.size()}}
                                 .dump()
                          << "\n";
            else
                std::cout << "m = " << m << ", " << ordered.size() << " ordered patterns\n";
            return kExitYes;
        }

        if (cmd_us->parsed()) {
            Graph g = parse_graph(slurp(us_graph));
            UnstarResult r = unstar(g, us_colors, us_m);
            if (r.verdict == UnstarResult::Verdict::no)
                return report_decision(opt, "unstar", false, "");
            if (r.verdict == UnstarResult::Verdict::yes)
                return report_decision(opt, "unstar", true, "");
            emit(serialize(r.remainder), us_out);
            return kExitYes;
        }

        if (cmd_gt->parsed()) {
            RelStructure b = parse_structure(slurp(gt_structure));
            TsilParams params = tsil_parameters(b, gt_girth, gt_n);
            if (params.n < 1)
                throw std::runtime_error("formula n = " + params.n_formula +
                                         " is impractical; pass --n");
            SilInstance inst = generate(b, params, opt.seed);
            emit(serialize(inst), gt_out);
            auto gi = girth(inst.blown);
            if (machine(opt)) {
                Json j{{"kind", "report"}, {"command", "gen-tsil"}};
                j["n"] = params.n;
                j["tuples_sampled"] = inst.tuples_sampled;
                j["tuples_final"] = inst.blown.tuple_count();
                j["girth"] = gi ? Json(*gi) : Json(nullptr);
                std::cout << j.dump() << "\n";
            } else {
                std::cerr << "n = " << params.n << ", sampled " << inst.tuples_sampled
                          << " tuples, kept " << inst.blown.tuple_count() << ", girth ";
                if (gi)
                    std::cerr << *gi << "\n";
                else
                    std::cerr << "acyclic\n";
            }
            return kExitYes;
        }

        if (cmd_vt->parsed()) {
            SilInstance inst = parse_sil_instance(slurp(vt_instance));
            inst.validate();  // throws on violation
            bool ok = true;
            Json j{{"kind", "report"}, {"command", "verify-tsil"}, {"invariants", "ok"}};
            if (!vt_witness.empty()) {
                WeakOrderWitness w = parse_witness(slurp(vt_witness));
                double delta = vt_delta.value_or(inst.params.delta);
                SpanningResult sr = verify_spanning(inst, w, delta, opt.budget);
                ok = sr.ok;
                j["spanning"] = sr.ok ? "ok" : "violated";
                j["families_checked"] = sr.families_checked;
                if (!sr.ok) {
                    const auto& ce = *sr.counterexample;
                    j["counterexample"] = {
                        {"symbol", inst.source.signature().symbols[ce.symbol].name},
                        {"base_tuple", ce.base_tuple},
                        {"sets", ce.sets}};
                }
            }
            if (machine(opt)) {
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "invariants: ok\n";
                if (!vt_witness.empty())
                    std::cout << "spanning: " << (ok ? "ok" : "violated") << "\n";
            }
            return ok ? kExitYes : kExitNo;
        }

        if (cmd_tr->parsed()) {
            RelStructure b = parse_structure(slurp(tr_structure));
            TemporalStructure t = parse_temporal(slurp(tr_template));
            TsilParams params = tsil_parameters(b, tr_girth, tr_n);
            TrialReport report = equivalence_trial(b, t, params, parse_seed_range(tr_seeds));

            Json j{{"kind", "report"}, {"command", "trial"}};
            j["rows"] = Json::array();
            for (const auto& row : report.rows) {
                Json r;
                r["seed"] = row.seed;
                r["girth"] = row.girth ? Json(*row.girth) : Json(nullptr);
                r["tuples_sampled"] = row.tuples_sampled;
                r["tuples_final"] = row.tuples_final;
                r["base_solvable"] = row.base_solvable;
                r["blown_solvable"] = row.blown_solvable;
                r["composition_ok"] = row.composition_ok;
                r["reverse_ok"] = row.reverse_ok;
                r["transfer"] = row.transfer_outcome;
                j["rows"].push_back(std::move(r));
            }
            j["composition_failures"] = report.composition_failures;
            j["reverse_failures"] = report.reverse_failures;
            j["transfer_failures"] = report.transfer_failures;
            if (!tr_out.empty()) emit(j.dump() + "\n", tr_out);

            if (machine(opt)) {
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "seed girth sampled kept base blown comp rev transfer\n";
                for (const auto& row : report.rows) {
                    std::cout << row.seed << " ";
                    if (row.girth)
                        std::cout << *row.girth;
                    else
                        std::cout << "-";
                    std::cout << " " << row.tuples_sampled << " " << row.tuples_final << " "
                              << (row.base_solvable ? "sat" : "unsat") << " "
                              << (row.blown_solvable ? "sat" : "unsat") << " "
                              << (row.composition_ok ? "ok" : "FAIL") << " "
                              << (row.reverse_ok ? "ok" : "FAIL") << " " << row.transfer_outcome
                              << "\n";
                }
                std::cout << "failures: composition " << report.composition_failures
                          << ", reverse " << report.reverse_failures << ", transfer "
                          << report.transfer_failures << "\n";
            }
            return (report.composition_failures + report.transfer_failures) == 0 ? kExitYes
                                                                                 : kExitNo;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
