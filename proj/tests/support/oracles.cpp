#include "support/oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace ordpat::testing {

std::vector<std::vector<int>> brute_rank_sequences(int n) {
    std::vector<std::vector<int>> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    std::vector<int> seq(n, 1);
    while (true) {
        int width = *std::max_element(seq.begin(), seq.end());
        std::vector<char> seen(width + 1, 0);
        for (int v : seq) seen[v] = 1;
        bool canonical = true;
        for (int r = 1; r <= width; ++r)
            if (!seen[r]) { canonical = false; break; }
        if (canonical) out.push_back(seq);
        int i = n - 1;
        while (i >= 0 && seq[i] == n) { seq[i] = 1; --i; }
        if (i < 0) break;
        ++seq[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<WeakOrderWitness> brute_temporal(const RelStructure& s,
                                               const TemporalStructure& t) {
    for (const auto& ranks : brute_rank_sequences(s.size())) {
        WeakOrderWitness w{ranks};
        if (witness_valid(s, t, w)) return w;
    }
    return std::nullopt;
}

bool chromatic_at_most(const Graph& g, int k) {
    if (g.size() == 0) return true;
    if (k <= 0) return false;
    std::vector<int> color(g.size(), -1);
    std::function<bool(int)> go = [&](int v) -> bool {
        if (v == g.size()) return true;
        for (int c = 0; c < k; ++c) {
            bool ok = true;
            for (int w : g.neighbors(v))
                if (w < v && color[w] == c) { ok = false; break; }
            if (!ok) continue;
            color[v] = c;
            if (go(v + 1)) return true;
        }
        color[v] = -1;
        return false;
    };
    return go(0);
}

bool nae_colorable(const Hypergraph3& h) {
    if (h.size == 0) return true;
    for (unsigned long mask = 0; mask < (1ul << h.size); ++mask) {
        bool good = true;
        for (const auto& e : h.hyperedges) {
            int a = (mask >> e[0]) & 1, b = (mask >> e[1]) & 1, c = (mask >> e[2]) & 1;
            if (a == b && b == c) { good = false; break; }
        }
        if (good) return true;
    }
    return false;
}

std::optional<int> brute_girth(const RelStructure& s) {
    int best = INT32_MAX;
    // degenerate cycles
    for (int sym = 0; sym < s.symbol_count(); ++sym)
        for (const auto& t : s.tuples(sym)) {
            Tuple sorted(t);
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) best = 1;
        }
    if (best == 1) return 1;

    // all alternating walks x_0, r_1, x_1, ... with distinct elements and
    // tuples, closing back at x_0
    struct Ref {
        int sym, idx;
    };
    std::vector<Ref> all;
    for (int sym = 0; sym < s.symbol_count(); ++sym)
        for (int idx = 0; idx < static_cast<int>(s.tuples(sym).size()); ++idx)
            all.push_back({sym, idx});

    std::vector<char> used_elem(s.size(), 0), used_tuple(all.size(), 0);
    std::function<void(int, int, int)> walk = [&](int start, int current, int tuples_used) {
        if (tuples_used >= best) return;
        for (size_t ti = 0; ti < all.size(); ++ti) {
            if (used_tuple[ti]) continue;
            const Tuple& tp = s.tuples(all[ti].sym)[all[ti].idx];
            if (std::find(tp.begin(), tp.end(), current) == tp.end()) continue;
            used_tuple[ti] = 1;
            for (int y : tp) {
                if (y == current) continue;
                if (y == start) {
                    if (tuples_used + 1 >= 2) best = std::min(best, tuples_used + 1);
                    continue;
                }
                if (used_elem[y]) continue;
                used_elem[y] = 1;
                walk(start, y, tuples_used + 1);
                used_elem[y] = 0;
            }
            used_tuple[ti] = 0;
        }
    };
    for (int e = 0; e < s.size(); ++e) {
        used_elem[e] = 1;
        walk(e, e, 0);
        used_elem[e] = 0;
    }
    if (best == INT32_MAX) return std::nullopt;
    return best;
}

namespace {

int pair_index(int i, int j, int n) {
    // i < j
    int idx = 0;
    for (int a = 0; a < i; ++a) idx += n - a - 1;
    return idx + (j - i - 1);
}

uint32_t canonical_mask(uint32_t mask, int n, const std::vector<std::vector<int>>& pair_maps) {
    uint32_t best = mask;
    for (const auto& pm : pair_maps) {
        uint32_t out = 0;
        uint32_t m = mask;
        while (m) {
            int b = __builtin_ctz(m);
            m &= m - 1;
            out |= 1u << pm[b];
        }
        best = std::min(best, out);
    }
    return best;
}

std::vector<std::vector<int>> make_pair_maps(int n) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::vector<std::vector<int>> maps;
    do {
        std::vector<int> pm(n * (n - 1) / 2);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                int a = perm[i], b = perm[j];
                if (a > b) std::swap(a, b);
                pm[pair_index(i, j, n)] = pair_index(a, b, n);
            }
        maps.push_back(std::move(pm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return maps;
}

}  // namespace

std::vector<Graph> graphs_up_to_iso(int n) {
    // orderly generation: extend canonical (k-1)-vertex graphs by one vertex
    std::set<uint32_t> level{0u};
    for (int k = 1; k <= n; ++k) {
        auto pair_maps = make_pair_maps(k);
        std::set<uint32_t> next;
        for (uint32_t parent : level) {
            for (uint32_t nb = 0; nb < (1u << (k - 1)); ++nb) {
                uint32_t mask = 0;
                // re-embed parent edges (same pair indexing for first k-1 vertices
                // requires remap: parent indices are for k-1 vertices)
                uint32_t pm = parent;
                while (pm) {
                    int b = __builtin_ctz(pm);
                    pm &= pm - 1;
                    // decode pair (i, j) in the (k-1)-vertex indexing
                    int i = 0, rem = b;
                    while (rem >= (k - 1) - i - 1) {
                        rem -= (k - 1) - i - 1;
                        ++i;
                    }
                    int j = i + 1 + rem;
                    mask |= 1u << pair_index(i, j, k);
                }
                for (int i = 0; i < k - 1; ++i)
                    if (nb & (1u << i)) mask |= 1u << pair_index(i, k - 1, k);
                next.insert(canonical_mask(mask, k, pair_maps));
            }
        }
        level = std::move(next);
    }
    std::vector<Graph> out;
    for (uint32_t mask : level) {
        Graph g(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (mask & (1u << pair_index(i, j, n))) g.add_edge(i, j);
        out.push_back(std::move(g));
    }
    return out;
}

Graph random_graph(int n, double edge_probability, Rng& rng) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.bernoulli(edge_probability)) g.add_edge(i, j);
    return g;
}

namespace {

// from-scratch ordered-occurrence check: try every increasing position tuple
bool occurs_in_order(const Graph& g, const std::vector<int>& seq, const OrderedGraph& f,
                     bool induced) {
    const Graph pat = f.canonical();
    const int k = pat.size(), n = static_cast<int>(seq.size());
    if (k > n) return false;
    std::vector<int> pos(k);
    std::function<bool(int, int)> pick = [&](int j, int from) -> bool {
        if (j == k) {
            for (int a = 0; a < k; ++a)
                for (int b = a + 1; b < k; ++b) {
                    bool pe = pat.adjacent(a, b);
                    bool ge = g.adjacent(seq[pos[a]], seq[pos[b]]);
                    if (pe && !ge) return false;
                    if (induced && !pe && ge) return false;
                }
            return true;
        }
        for (int q = from; q < n; ++q) {
            pos[j] = q;
            if (pick(j + 1, q + 1)) return true;
        }
        return false;
    };
    return pick(0, 0);
}

}  // namespace

std::optional<std::vector<int>> brute_solve_ordering(const Graph& g,
                                                     const std::vector<OrderedGraph>& family,
                                                     bool induced) {
    const int n = g.size();
    std::vector<int> seq(n);
    for (int i = 0; i < n; ++i) seq[i] = i;
    std::sort(seq.begin(), seq.end());
    do {
        bool good = true;
        for (const auto& f : family)
            if (occurs_in_order(g, seq, f, induced)) { good = false; break; }
        if (good) {
            std::vector<int> positions(n);
            for (int p = 0; p < n; ++p) positions[seq[p]] = p;
            return positions;
        }
    } while (std::next_permutation(seq.begin(), seq.end()));
    return std::nullopt;
}

namespace {

// injective color-preserving map with edges to edges, fully enumerated
bool colored_occurs_brute(const Graph& g, const std::vector<int>& gcolors, const Graph& f,
                          const std::vector<int>& fcolors) {
    const int k = f.size();
    std::vector<int> image(k, -1);
    std::vector<char> used(g.size(), 0);
    std::function<bool(int)> go = [&](int u) -> bool {
        if (u == k) return true;
        for (int x = 0; x < g.size(); ++x) {
            if (used[x] || gcolors[x] != fcolors[u]) continue;
            bool ok = true;
            for (int w : f.neighbors(u))
                if (w < u && !g.adjacent(x, image[w])) { ok = false; break; }
            if (!ok) continue;
            image[u] = x;
            used[x] = 1;
            if (go(u + 1)) return true;
            image[u] = -1;
            used[x] = 0;
        }
        return false;
    };
    return go(0);
}

}  // namespace

std::optional<std::vector<int>> brute_solve_coloring(const Graph& g,
                                                     const std::vector<std::string>& palette,
                                                     const std::vector<ColoredGraph>& family) {
    const int n = g.size(), c = static_cast<int>(palette.size());
    if (n == 0) return std::vector<int>{};
    if (c == 0) return std::nullopt;
    std::vector<int> colors(n, 0);
    while (true) {
        bool good = true;
        for (const auto& f : family) {
            if (f.palette != palette) throw std::invalid_argument("palette mismatch in oracle");
            if (colored_occurs_brute(g, colors, f.graph, f.colors)) { good = false; break; }
        }
        if (good) return colors;
        int i = n - 1;
        while (i >= 0 && colors[i] == c - 1) { colors[i] = 0; --i; }
        if (i < 0) break;
        ++colors[i];
    }
    return std::nullopt;
}

bool structures_isomorphic(const RelStructure& a, const RelStructure& b) {
    if (a.signature() != b.signature() || a.size() != b.size()) return false;
    std::vector<int> perm(a.size());
    for (int i = 0; i < a.size(); ++i) perm[i] = i;
    do {
        bool ok = true;
        for (int sym = 0; sym < a.symbol_count() && ok; ++sym) {
            if (a.tuples(sym).size() != b.tuples(sym).size()) { ok = false; break; }
            for (const auto& t : a.tuples(sym)) {
                Tuple image;
                for (int x : t) image.push_back(perm[x]);
                if (!b.has_tuple(sym, image)) { ok = false; break; }
            }
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

bool colored_structure_occurs(const ColoredStructure& host, const ColoredStructure& pat) {
    if (host.palette != pat.palette) throw std::invalid_argument("palette mismatch in oracle");
    const int k = pat.structure.size();
    std::vector<int> image(k, -1);
    std::vector<char> used(host.structure.size(), 0);
    std::function<bool(int)> go = [&](int u) -> bool {
        if (u == k) {
            for (int sym = 0; sym < pat.structure.symbol_count(); ++sym)
                for (const auto& t : pat.structure.tuples(sym)) {
                    Tuple im;
                    for (int x : t) im.push_back(image[x]);
                    if (!host.structure.has_tuple(sym, im)) return false;
                }
            return true;
        }
        for (int x = 0; x < host.structure.size(); ++x) {
            if (used[x] || host.colors[x] != pat.colors[u]) continue;
            image[u] = x;
            used[x] = 1;
            if (go(u + 1)) return true;
            image[u] = -1;
            used[x] = 0;
        }
        return false;
    };
    return go(0);
}

bool structure_colorable(const RelStructure& t, const std::vector<std::string>& palette,
                         const std::vector<ColoredStructure>& patterns) {
    const int n = t.size(), c = static_cast<int>(palette.size());
    if (n == 0) return true;
    if (c == 0) return false;
    std::vector<int> colors(n, 0);
    while (true) {
        ColoredStructure lift{t, palette, colors};
        bool good = true;
        for (const auto& p : patterns)
            if (colored_structure_occurs(lift, p)) { good = false; break; }
        if (good) return true;
        int i = n - 1;
        while (i >= 0 && colors[i] == c - 1) { colors[i] = 0; --i; }
        if (i < 0) break;
        ++colors[i];
    }
    return false;
}

OrderedGraph example_pattern() {
    Graph f(4);
    f.add_edge(0, 1);
    f.add_edge(1, 2);
    f.add_edge(2, 3);
    f.add_edge(0, 3);
    f.add_edge(1, 3);
    return OrderedGraph{f, {0, 1, 2, 3}};
}

OrderedGraph monotone_path(int vertices) {
    Graph p(vertices);
    for (int i = 0; i + 1 < vertices; ++i) p.add_edge(i, i + 1);
    std::vector<int> identity(vertices);
    for (int i = 0; i < vertices; ++i) identity[i] = i;
    return OrderedGraph{p, identity};
}

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

}  // namespace ordpat::testing
