#include "ordpat/reductions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "ordpat/girth.hpp"

namespace ordpat {

// ---- Hypergraph3 ----

bool Hypergraph3::add_hyperedge(int a, int b, int c) {
    std::array<int, 3> e{a, b, c};
    std::sort(e.begin(), e.end());
    if (e[0] == e[1] || e[1] == e[2])
        throw std::invalid_argument("hypergraph: hyperedge must be a 3-set");
    if (e[0] < 0 || e[2] >= size)
        throw std::invalid_argument("hypergraph: hyperedge vertex out of range");
    auto it = std::lower_bound(hyperedges.begin(), hyperedges.end(), e);
    if (it != hyperedges.end() && *it == e) return false;
    hyperedges.insert(it, e);
    return true;
}

void Hypergraph3::validate() const {
    if (size < 0) throw std::invalid_argument("hypergraph: negative size");
    const std::array<int, 3>* prev = nullptr;
    for (const auto& e : hyperedges) {
        if (e[0] >= e[1] || e[1] >= e[2])
            throw std::invalid_argument("hypergraph: hyperedge must be a sorted 3-set");
        if (e[0] < 0 || e[2] >= size)
            throw std::invalid_argument("hypergraph: hyperedge vertex out of range");
        if (prev && !(*prev < e)) throw std::invalid_argument("hypergraph: duplicate hyperedge");
        prev = &e;
    }
}

Hypergraph3 triangles_to_nae(const Graph& g) {
    Hypergraph3 h;
    h.size = g.size();
    for (auto [u, v] : g.edges())
        for (int w = v + 1; w < g.size(); ++w)
            if (g.adjacent(u, w) && g.adjacent(v, w)) h.add_hyperedge(u, v, w);
    return h;
}

RelStructure hypergraph_as_structure(const Hypergraph3& h) {
    h.validate();
    RelStructure s(Signature{{{"E3", 3}}}, h.size);
    for (const auto& e : h.hyperedges) s.add_tuple(0, Tuple{e[0], e[1], e[2]});
    return s;
}

Graph nae_to_triangles(const Hypergraph3& h) {
    h.validate();
    auto s = hypergraph_as_structure(h);
    if (auto gi = girth(s); gi && *gi < 4)
        throw std::invalid_argument("nae_to_triangles: hypergraph girth below four (cycle length " +
                                    std::to_string(*gi) + ")");
    Graph g(h.size);
    for (const auto& e : h.hyperedges) {
        g.add_edge(e[0], e[1]);
        g.add_edge(e[0], e[2]);
        g.add_edge(e[1], e[2]);
    }
    return g;
}

// ---- example-2 style reductions ----

namespace {

Signature family_signature(const std::vector<OrderedGraph>& family) {
    Signature sig;
    for (size_t i = 0; i < family.size(); ++i) {
        family[i].validate();
        if (family[i].graph.size() == 0)
            throw std::invalid_argument("patterns_to_temporal: empty pattern");
        sig.symbols.push_back(Symbol{"R" + std::to_string(i + 1), family[i].graph.size()});
    }
    return sig;
}

// all injective homomorphisms pat -> g, as coordinate tuples
void enumerate_embeddings(const Graph& g, const Graph& pat,
                          const std::function<void(const std::vector<int>&)>& emit) {
    const int k = pat.size();
    std::vector<int> image(k, -1);
    std::vector<char> used(g.size(), 0);
    std::function<void(int)> place = [&](int u) {
        if (u == k) {
            emit(image);
            return;
        }
        for (int x = 0; x < g.size(); ++x) {
            if (used[x] || g.degree(x) < pat.degree(u)) continue;
            bool ok = true;
            for (int w : pat.neighbors(u))
                if (w < u && !g.adjacent(x, image[w])) { ok = false; break; }
            if (!ok) continue;
            image[u] = x;
            used[x] = 1;
            place(u + 1);
            image[u] = -1;
            used[x] = 0;
        }
    };
    place(0);
}

}  // namespace

TemporalStructure patterns_to_temporal(const std::vector<OrderedGraph>& family) {
    TemporalStructure t(family_signature(family));
    for (size_t i = 0; i < family.size(); ++i) {
        const Graph canon = family[i].canonical();
        const int k = canon.size();
        // linear patterns whose order re-creates the pattern itself
        std::set<RankPattern> forbidden;
        std::vector<int> perm(k);
        for (int j = 0; j < k; ++j) perm[j] = j;
        do {
            if (OrderedGraph{canon, perm}.canonical() == canon) {
                std::vector<int> ranks(k);
                for (int j = 0; j < k; ++j) ranks[j] = perm[j] + 1;
                forbidden.insert(RankPattern{ranks});
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        for (auto& p : all_rank_patterns(k)) {
            if (!p.repeat_free()) continue;  // repeats are forbidden
            if (forbidden.count(p)) continue;
            t.add_allowed(static_cast<int>(i), std::move(p));
        }
    }
    return t;
}

RelStructure graph_to_temporal_instance(const Graph& g, const std::vector<OrderedGraph>& family) {
    RelStructure s(family_signature(family), g.size());
    for (size_t i = 0; i < family.size(); ++i) {
        const Graph canon = family[i].canonical();
        enumerate_embeddings(g, canon, [&](const std::vector<int>& image) {
            s.add_tuple(static_cast<int>(i), image);
        });
    }
    return s;
}

// ---- gadget reduction (colored graphs) ----

GadgetSpec build_gadgets(const Signature& sig) {
    sig.validate();
    if (sig.symbols.empty()) throw std::invalid_argument("build_gadgets: empty signature");
    GadgetSpec spec;
    spec.signature = sig;
    const int r = sig.max_arity();
    const int K = static_cast<int>(sig.symbols.size()) + r + 3;
    spec.K = K;
    for (size_t s = 0; s < sig.symbols.size(); ++s) {
        const int arity = sig.symbols[s].arity;
        Gadget gad;
        gad.graph = Graph(K + arity * (K - 1));
        for (int j = 0; j + 1 < K; ++j) gad.graph.add_edge(j, j + 1);
        gad.graph.add_edge(K - 1, 0);
        gad.graph.add_edge(0, K - 2);  // v_1 v_{K-1}
        gad.graph.add_edge(0, K - 3);  // v_1 v_{K-2}
        int fresh = K;
        for (int j = 0; j < arity; ++j) {
            int prev = static_cast<int>(s) + j;  // path starts at v_{i+j-1}
            for (int step = 0; step < K - 1; ++step, ++fresh) {
                gad.graph.add_edge(prev, fresh);
                prev = fresh;
            }
            gad.roots.push_back(prev);
        }
        spec.gadgets.push_back(std::move(gad));
    }
    return spec;
}

RootedGraph structure_to_graph(const RelStructure& t) {
    t.validate();
    const GadgetSpec spec = build_gadgets(t.signature());
    int total = t.size();
    for (int sym = 0; sym < t.symbol_count(); ++sym) {
        const auto& gad = spec.gadgets[sym];
        total += static_cast<int>(t.tuples(sym).size()) *
                 (gad.graph.size() - static_cast<int>(gad.roots.size()));
    }
    RootedGraph out{Graph(total), t.size()};
    int fresh = t.size();
    for (int sym = 0; sym < t.symbol_count(); ++sym) {
        const auto& gad = spec.gadgets[sym];
        for (const auto& tp : t.tuples(sym)) {
            std::vector<int> to_host(gad.graph.size(), -1);
            for (size_t j = 0; j < gad.roots.size(); ++j) to_host[gad.roots[j]] = tp[j];
            for (int v = 0; v < gad.graph.size(); ++v)
                if (to_host[v] < 0) to_host[v] = fresh++;
            for (auto [u, v] : gad.graph.edges()) out.graph.add_edge(to_host[u], to_host[v]);
        }
    }
    return out;
}

// ---- ColoredStructure ----

void ColoredStructure::normalize() {
    std::vector<std::string> names;
    names.reserve(colors.size());
    for (int c : colors) names.push_back(palette.at(c));
    std::sort(palette.begin(), palette.end());
    palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
    for (size_t v = 0; v < colors.size(); ++v) {
        auto it = std::lower_bound(palette.begin(), palette.end(), names[v]);
        colors[v] = static_cast<int>(it - palette.begin());
    }
}

void ColoredStructure::validate() const {
    structure.validate();
    if (static_cast<int>(colors.size()) != structure.size())
        throw std::invalid_argument("colored structure: every element needs a color");
    if (!std::is_sorted(palette.begin(), palette.end()) ||
        std::adjacent_find(palette.begin(), palette.end()) != palette.end())
        throw std::invalid_argument("colored structure: palette not normalized");
    for (int c : colors)
        if (c < 0 || c >= static_cast<int>(palette.size()))
            throw std::invalid_argument("colored structure: color outside palette");
}

std::vector<ColoredPattern> forbidden_family(const Signature& sig,
                                             const std::vector<std::string>& palette,
                                             const std::vector<ColoredStructure>& patterns) {
    const GadgetSpec spec = build_gadgets(sig);
    std::vector<ColoredPattern> out;

    for (const auto& gad : spec.gadgets) {
        const int sz = gad.graph.size();
        // (1) the gadget plus one extra edge, all colorings
        for (int u = 0; u < sz; ++u)
            for (int v = u + 1; v < sz; ++v) {
                if (gad.graph.adjacent(u, v)) continue;
                Graph plus = gad.graph;
                plus.add_edge(u, v);
                out.push_back(ColoredPattern{std::move(plus), palette, std::vector<int>(sz, -1)});
            }
        // (2) the gadget plus a pendant vertex at a non-root, all colorings
        std::set<int> roots(gad.roots.begin(), gad.roots.end());
        for (int u = 0; u < sz; ++u) {
            if (roots.count(u)) continue;
            Graph plus(sz + 1);
            for (auto [a, b] : gad.graph.edges()) plus.add_edge(a, b);
            plus.add_edge(u, sz);
            out.push_back(ColoredPattern{std::move(plus), palette, std::vector<int>(sz + 1, -1)});
        }
    }

    // (3) glued gadget graphs, base colored as the pattern, rest free
    for (const auto& sp : patterns) {
        sp.validate();
        if (sp.structure.signature() != sig)
            throw std::invalid_argument("forbidden_family: pattern signature mismatch");
        RootedGraph rooted = structure_to_graph(sp.structure);
        std::vector<int> colors(rooted.graph.size(), -1);
        for (int v = 0; v < rooted.base_size; ++v) {
            auto it = std::lower_bound(palette.begin(), palette.end(), sp.palette[sp.colors[v]]);
            if (it == palette.end() || *it != sp.palette[sp.colors[v]])
                throw std::invalid_argument("forbidden_family: pattern color outside palette");
            colors[v] = static_cast<int>(it - palette.begin());
        }
        out.push_back(ColoredPattern{rooted.graph, palette, std::move(colors)});
    }
    return out;
}

namespace {

// homomorphisms gadget -> g injective on non-root vertices
void enumerate_gadget_copies(const Graph& g, const Gadget& gad,
                             const std::function<void(const std::vector<int>&)>& emit) {
    const int k = gad.graph.size();
    std::vector<char> is_root(k, 0);
    for (int rt : gad.roots) is_root[rt] = 1;
    std::vector<int> root_neighbors(k, 0);
    for (int v = 0; v < k; ++v)
        for (int w : gad.graph.neighbors(v))
            if (is_root[w]) ++root_neighbors[v];

    std::vector<int> image(k, -1);
    std::vector<char> used(g.size(), 0);  // marks non-root images only
    std::function<void(int)> place = [&](int u) {
        if (u == k) {
            emit(image);
            return;
        }
        // candidates among neighbors of an already-placed neighbor, if any
        int anchor = -1;
        for (int w : gad.graph.neighbors(u))
            if (image[w] >= 0) { anchor = image[w]; break; }
        auto try_vertex = [&](int x) {
            if (!is_root[u]) {
                if (used[x]) return;
                if (g.degree(x) < gad.graph.degree(u) - root_neighbors[u]) return;
            }
            for (int w : gad.graph.neighbors(u))
                if (image[w] >= 0 && !g.adjacent(x, image[w])) return;
            image[u] = x;
            if (!is_root[u]) used[x] = 1;
            place(u + 1);
            image[u] = -1;
            if (!is_root[u]) used[x] = 0;
        };
        if (anchor >= 0) {
            for (int x : g.neighbors(anchor)) try_vertex(x);
        } else {
            for (int x = 0; x < g.size(); ++x) try_vertex(x);
        }
    };
    place(0);
}

}  // namespace

StructureVerdict graph_to_structure(const Graph& g, const Signature& sig) {
    const GadgetSpec spec = build_gadgets(sig);
    StructureVerdict out;

    struct Copy {
        int symbol;
        Tuple roots;
    };
    std::vector<Copy> copies;
    bool bad = false;

    for (int sym = 0; sym < static_cast<int>(spec.gadgets.size()) && !bad; ++sym) {
        const Gadget& gad = spec.gadgets[sym];
        std::vector<char> is_root(gad.graph.size(), 0);
        for (int rt : gad.roots) is_root[rt] = 1;
        enumerate_gadget_copies(g, gad, [&](const std::vector<int>& image) {
            if (bad) return;
            // image edges of this copy
            std::set<std::pair<int, int>> copy_edges;
            for (auto [u, v] : gad.graph.edges()) {
                int a = image[u], b = image[v];
                copy_edges.insert({std::min(a, b), std::max(a, b)});
            }
            // a copy plus one more edge at a non-root image refutes g
            for (int u = 0; u < gad.graph.size(); ++u) {
                if (is_root[u]) continue;
                for (int y : g.neighbors(image[u])) {
                    int a = std::min(image[u], y), b = std::max(image[u], y);
                    if (!copy_edges.count({a, b})) { bad = true; return; }
                }
            }
            Tuple roots;
            for (int rt : gad.roots) roots.push_back(image[rt]);
            copies.push_back(Copy{sym, std::move(roots)});
        });
    }
    if (bad) {
        out.no = true;
        return out;
    }

    std::set<int> universe;
    for (const auto& c : copies)
        for (int v : c.roots) universe.insert(v);
    out.universe_vertices.assign(universe.begin(), universe.end());
    std::map<int, int> index;
    for (size_t i = 0; i < out.universe_vertices.size(); ++i)
        index[out.universe_vertices[i]] = static_cast<int>(i);

    out.structure = RelStructure(sig, static_cast<int>(out.universe_vertices.size()));
    for (const auto& c : copies) {
        Tuple t;
        for (int v : c.roots) t.push_back(index[v]);
        out.structure.add_tuple(c.symbol, t);
    }
    return out;
}

// ---- star reduction (ordered graphs) ----

namespace {

Graph complete_graph(int m) {
    Graph g(m);
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v) g.add_edge(u, v);
    return g;
}

std::vector<OrderedGraph> as_identity_ordered(const std::set<Graph>& graphs) {
    std::vector<OrderedGraph> out;
    for (const auto& s : graphs) {
        std::vector<int> identity(s.size());
        for (int i = 0; i < s.size(); ++i) identity[i] = i;
        out.push_back(OrderedGraph{s, identity});
    }
    return out;
}

}  // namespace

std::vector<OrderedGraph> ordering_family(const std::vector<std::string>& palette,
                                          const std::vector<ColoredGraph>& colored_family,
                                          int m) {
    if (m < 1) throw std::invalid_argument("ordering_family: m must be >= 1");
    const int c = static_cast<int>(palette.size());
    if (c < 1) throw std::invalid_argument("ordering_family: empty palette");
    std::set<Graph> out;

    // (1) K_m plus an attached vertex, every ordering: pick the positions
    // of the attached vertex and its neighbor, K_m fills the rest
    for (int pend = 0; pend <= m; ++pend)
        for (int nb = 0; nb <= m; ++nb) {
            if (nb == pend) continue;
            Graph s(m + 1);
            for (int u = 0; u <= m; ++u)
                for (int v = u + 1; v <= m; ++v)
                    if (u != pend && v != pend) s.add_edge(u, v);
            s.add_edge(pend, nb);
            out.insert(std::move(s));
        }

    // (2) K_m plus an isolated vertex, neither first nor last
    for (int iso = 1; iso < m; ++iso) {
        Graph s(m + 1);
        for (int u = 0; u <= m; ++u)
            for (int v = u + 1; v <= m; ++v)
                if (u != iso && v != iso) s.add_edge(u, v);
        out.insert(std::move(s));
    }

    // (3) c disjoint copies of K_m, each an interval
    {
        Graph s(c * m);
        for (int b = 0; b < c; ++b)
            for (int u = 0; u < m; ++u)
                for (int v = u + 1; v < m; ++v) s.add_edge(b * m + u, b * m + v);
        out.insert(std::move(s));
    }

    // (4) starred patterns: class 1, K_m, class 2, ..., K_m, class c;
    // every order inside a class
    for (const auto& f : colored_family) {
        f.validate();
        if (f.palette != palette) throw std::invalid_argument("ordering_family: palette mismatch");
        std::vector<std::vector<int>> classes(c);
        for (int v = 0; v < f.graph.size(); ++v) classes[f.colors[v]].push_back(v);
        const int total = f.graph.size() + (c - 1) * m;

        std::vector<int> position(f.graph.size(), -1);
        std::function<void(int, int)> lay = [&](int cls, int offset) {
            if (cls == c) {
                Graph s(total);
                for (auto [u, v] : f.graph.edges()) s.add_edge(position[u], position[v]);
                int block = 0;
                for (int b = 0; b < c - 1; ++b) {
                    // the b-th separator sits after classes 0..b
                    block += static_cast<int>(classes[b].size());
                    for (int u = 0; u < m; ++u)
                        for (int v = u + 1; v < m; ++v)
                            s.add_edge(block + b * m + u, block + b * m + v);
                }
                out.insert(std::move(s));
                return;
            }
            std::vector<int> perm = classes[cls];
            if (perm.empty()) {
                lay(cls + 1, offset + m);
                return;
            }
            std::sort(perm.begin(), perm.end());
            do {
                for (size_t i = 0; i < perm.size(); ++i)
                    position[perm[i]] = offset + static_cast<int>(i);
                lay(cls + 1, offset + static_cast<int>(perm.size()) + m);
            } while (std::next_permutation(perm.begin(), perm.end()));
        };
        lay(0, 0);
    }

    return as_identity_ordered(out);
}

int find_min_forbidden_clique(const std::vector<std::string>& palette,
                              const std::vector<ColoredGraph>& colored_family, int cap) {
    for (int m = 1; m <= cap; ++m) {
        if (!solve_coloring(complete_graph(m), palette, colored_family)) return m;
    }
    throw std::runtime_error("find_min_forbidden_clique: every K_m up to the cap is colorable");
}

Graph star(const Graph& g, int num_colors, int m) {
    if (num_colors < 1) throw std::invalid_argument("star: need at least one color");
    if (m < 1) throw std::invalid_argument("star: m must be >= 1");
    Graph out(g.size() + (num_colors - 1) * m);
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (int b = 0; b < num_colors - 1; ++b) {
        const int off = g.size() + b * m;
        for (int u = 0; u < m; ++u)
            for (int v = u + 1; v < m; ++v) out.add_edge(off + u, off + v);
    }
    return out;
}

UnstarResult unstar(const Graph& g, int num_colors, int m) {
    if (num_colors < 1) throw std::invalid_argument("unstar: need at least one color");
    if (m < 1) throw std::invalid_argument("unstar: m must be >= 1");
    const int n = g.size();

    // any K_m copy with an edge leaving it refutes g
    std::vector<int> members;
    bool leaving = false;
    std::function<void(int)> cliques = [&](int next) {
        if (leaving) return;
        if (static_cast<int>(members.size()) == m) {
            for (int u : members)
                for (int y : g.neighbors(u))
                    if (!std::binary_search(members.begin(), members.end(), y)) {
                        leaving = true;
                        return;
                    }
            return;
        }
        for (int x = next; x < n; ++x) {
            if (g.degree(x) < m - 1) continue;
            bool ok = true;
            for (int u : members)
                if (!g.adjacent(u, x)) { ok = false; break; }
            if (!ok) continue;
            members.push_back(x);
            cliques(x + 1);
            members.pop_back();
            if (leaving) return;
        }
    };
    cliques(0);
    if (leaving) return UnstarResult{UnstarResult::Verdict::no, Graph{}};

    // now every K_m copy is a whole component; count components == K_m
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int v = 0; v < n; ++v) {
        if (comp[v] >= 0) continue;
        std::vector<int> stack{v};
        comp[v] = ncomp;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(u))
                if (comp[w] < 0) { comp[w] = ncomp; stack.push_back(w); }
        }
        ++ncomp;
    }
    std::vector<std::vector<int>> comp_members(ncomp);
    for (int v = 0; v < n; ++v) comp_members[comp[v]].push_back(v);
    std::vector<char> is_clique_comp(ncomp, 0);
    int count = 0;
    for (int cidx = 0; cidx < ncomp; ++cidx) {
        const auto& mem = comp_members[cidx];
        if (static_cast<int>(mem.size()) != m) continue;
        bool complete = true;
        for (size_t i = 0; i < mem.size() && complete; ++i)
            for (size_t j = i + 1; j < mem.size(); ++j)
                if (!g.adjacent(mem[i], mem[j])) { complete = false; break; }
        if (complete) {
            is_clique_comp[cidx] = 1;
            ++count;
        }
    }

    if (count < num_colors - 1) return UnstarResult{UnstarResult::Verdict::yes, Graph{}};
    if (count >= num_colors) return UnstarResult{UnstarResult::Verdict::no, Graph{}};

    std::vector<int> keep_index(n, -1);
    int kept = 0;
    for (int v = 0; v < n; ++v)
        if (!is_clique_comp[comp[v]]) keep_index[v] = kept++;
    Graph h(kept);
    for (auto [u, v] : g.edges())
        if (keep_index[u] >= 0 && keep_index[v] >= 0) h.add_edge(keep_index[u], keep_index[v]);
    return UnstarResult{UnstarResult::Verdict::graph, std::move(h)};
}

}  // namespace ordpat
