#include "ordpat/patterns.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace ordpat {

namespace {

// ---- ordered matching ----
// Patterns are canonical (vertex id == order position). Occurrences are
// strictly increasing position tuples in the host sequence.

bool ordered_match_desc(const Graph& host, const std::vector<int>& seq, const Graph& pat,
                        bool induced, std::vector<int>& at, int j) {
    if (j < 0) return true;
    const int k = pat.size();
    const int upper = (j + 1 < k) ? at[j + 1] : static_cast<int>(seq.size());
    for (int q = upper - 1; q >= j; --q) {
        bool ok = true;
        for (int j2 = j + 1; j2 < k && ok; ++j2) {
            const bool pe = pat.adjacent(j, j2);
            const bool ge = host.adjacent(seq[q], seq[at[j2]]);
            if (pe && !ge) ok = false;
            if (induced && !pe && ge) ok = false;
        }
        if (ok) {
            at[j] = q;
            if (ordered_match_desc(host, seq, pat, induced, at, j - 1)) return true;
        }
    }
    return false;
}

// Occurrence whose largest position is exactly `last`.
bool ordered_occurs_anchored(const Graph& host, const std::vector<int>& seq, const Graph& pat,
                             bool induced, int last) {
    const int k = pat.size();
    if (k == 0) return true;
    if (last + 1 < k) return false;
    std::vector<int> at(k);
    at[k - 1] = last;
    return ordered_match_desc(host, seq, pat, induced, at, k - 2);
}

bool ordered_occurs_impl(const Graph& host, const std::vector<int>& seq, const Graph& pat,
                         bool induced) {
    const int k = pat.size();
    if (k == 0) return true;
    for (int last = k - 1; last < static_cast<int>(seq.size()); ++last)
        if (ordered_occurs_anchored(host, seq, pat, induced, last)) return true;
    return false;
}

// ---- colored / plain subgraph matching ----
// Injective homomorphism search. Pattern vertices with a fixed color must
// land on a host vertex carrying that color; free vertices land anywhere.
// host_colors may mark vertices as uncolored (-1) during solver search.

struct EmbedState {
    const Graph& host;
    const std::vector<int>& host_colors;  // -1 = uncolored; empty = ignore colors
    const Graph& pat;
    const std::vector<int>& pat_colors;  // -1 = free; empty = ignore colors
    std::vector<int> image;              // pattern vertex -> host vertex, -1 unset
    std::vector<char> used;

    bool color_ok(int u, int x) const {
        if (pat_colors.empty() || pat_colors[u] < 0) return true;
        if (host_colors.empty()) return false;
        return host_colors[x] == pat_colors[u];
    }

    bool consistent(int u, int x) const {
        if (used[x]) return false;
        if (!color_ok(u, x)) return false;
        if (host.degree(x) < pat.degree(u)) return false;
        for (int w : pat.neighbors(u)) {
            int y = image[w];
            if (y >= 0 && !host.adjacent(x, y)) return false;
        }
        return true;
    }

    bool extend(const std::vector<int>& order, size_t step) {
        if (step == order.size()) return true;
        const int u = order[step];
        // prefer candidates adjacent to an already-mapped neighbor
        int mapped_nb = -1;
        for (int w : pat.neighbors(u))
            if (image[w] >= 0) { mapped_nb = image[w]; break; }
        auto try_vertex = [&](int x) {
            if (!consistent(u, x)) return false;
            image[u] = x;
            used[x] = 1;
            if (extend(order, step + 1)) return true;
            image[u] = -1;
            used[x] = 0;
            return false;
        };
        if (mapped_nb >= 0) {
            for (int x : host.neighbors(mapped_nb))
                if (try_vertex(x)) return true;
        } else {
            for (int x = 0; x < host.size(); ++x)
                if (try_vertex(x)) return true;
        }
        return false;
    }
};

// Matching order: BFS from `start`, then remaining components seeded by
// (fixed color, degree).
std::vector<int> match_order(const Graph& pat, const std::vector<int>& pat_colors, int start) {
    const int k = pat.size();
    std::vector<int> order;
    std::vector<char> seen(k, 0);
    auto bfs_from = [&](int s) {
        seen[s] = 1;
        size_t head = order.size();
        order.push_back(s);
        while (head < order.size()) {
            int u = order[head++];
            for (int w : pat.neighbors(u))
                if (!seen[w]) { seen[w] = 1; order.push_back(w); }
        }
    };
    if (start >= 0) bfs_from(start);
    while (static_cast<int>(order.size()) < k) {
        int best = -1;
        for (int v = 0; v < k; ++v) {
            if (seen[v]) continue;
            if (best < 0) { best = v; continue; }
            const bool vf = !pat_colors.empty() && pat_colors[v] >= 0;
            const bool bf = !pat_colors.empty() && pat_colors[best] >= 0;
            if (std::pair(vf, pat.degree(v)) > std::pair(bf, pat.degree(best))) best = v;
        }
        bfs_from(best);
    }
    return order;
}

const std::vector<int> kNoColors;

// anchor >= 0: some fixed-color pattern vertex must map to `anchor`.
bool pattern_embeds(const Graph& host, const std::vector<int>& host_colors, const Graph& pat,
                    const std::vector<int>& pat_colors, int anchor) {
    const int k = pat.size();
    if (k == 0) return true;
    if (k > host.size()) return false;
    EmbedState st{host, host_colors, pat, pat_colors,
                  std::vector<int>(k, -1), std::vector<char>(host.size(), 0)};
    if (anchor >= 0) {
        for (int a = 0; a < k; ++a) {
            if (pat_colors.empty() || pat_colors[a] < 0) continue;
            if (!st.consistent(a, anchor)) continue;
            st.image[a] = anchor;
            st.used[anchor] = 1;
            auto order = match_order(pat, pat_colors, a);
            if (st.extend(order, 1)) return true;
            st.image[a] = -1;
            st.used[anchor] = 0;
        }
        return false;
    }
    int start = 0;
    for (int v = 1; v < k; ++v) {
        const bool vf = !pat_colors.empty() && pat_colors[v] >= 0;
        const bool sf = !pat_colors.empty() && pat_colors[start] >= 0;
        if (std::pair(vf, pat.degree(v)) > std::pair(sf, pat.degree(start))) start = v;
    }
    auto order = match_order(pat, pat_colors, start);
    return st.extend(order, 0);
}

void require_same_palette(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    if (a != b) throw std::invalid_argument("palette mismatch");
}

}  // namespace

bool ordered_occurs(const OrderedGraph& g, const OrderedGraph& f, bool induced) {
    g.validate();
    f.validate();
    if (f.graph.size() > g.graph.size()) return false;
    const Graph host = g.canonical();
    const Graph pat = f.canonical();
    std::vector<int> seq(host.size());
    for (int i = 0; i < host.size(); ++i) seq[i] = i;
    return ordered_occurs_impl(host, seq, pat, induced);
}

std::optional<std::vector<int>> solve_ordering(const Graph& g,
                                               const std::vector<OrderedGraph>& family,
                                               bool induced) {
    const int n = g.size();
    std::vector<Graph> pats;
    for (const auto& f : family) {
        f.validate();
        if (f.graph.size() == 0) return std::nullopt;  // empty pattern occurs everywhere
        if (f.graph.size() <= n) pats.push_back(f.canonical());
    }

    std::vector<int> seq;
    seq.reserve(n);
    std::vector<char> placed(n, 0);
    std::function<bool()> step = [&]() -> bool {
        if (static_cast<int>(seq.size()) == n) return true;
        for (int v = 0; v < n; ++v) {
            if (placed[v]) continue;
            seq.push_back(v);
            placed[v] = 1;
            const int last = static_cast<int>(seq.size()) - 1;
            bool ok = true;
            for (const auto& pat : pats)
                if (ordered_occurs_anchored(g, seq, pat, induced, last)) { ok = false; break; }
            if (ok && step()) return true;
            seq.pop_back();
            placed[v] = 0;
        }
        return false;
    };
    if (!step()) return std::nullopt;
    std::vector<int> positions(n);
    for (int p = 0; p < n; ++p) positions[seq[p]] = p;
    return positions;
}

std::vector<OrderedGraph> supergraph_closure(const std::vector<OrderedGraph>& family) {
    std::set<Graph> out;
    for (const auto& f : family) {
        f.validate();
        const Graph base = f.canonical();
        const int k = base.size();
        std::vector<std::pair<int, int>> missing;
        for (int u = 0; u < k; ++u)
            for (int v = u + 1; v < k; ++v)
                if (!base.adjacent(u, v)) missing.emplace_back(u, v);
        if (missing.size() > 20)
            throw std::invalid_argument("supergraph_closure: pattern too sparse to enumerate");
        for (unsigned long mask = 0; mask < (1ul << missing.size()); ++mask) {
            Graph s = base;
            for (size_t i = 0; i < missing.size(); ++i)
                if (mask & (1ul << i)) s.add_edge(missing[i].first, missing[i].second);
            out.insert(std::move(s));
        }
    }
    std::vector<OrderedGraph> res;
    for (const auto& s : out) {
        std::vector<int> identity(s.size());
        for (int i = 0; i < s.size(); ++i) identity[i] = i;
        res.push_back(OrderedGraph{s, identity});
    }
    return res;
}

bool colored_occurs(const ColoredGraph& g, const ColoredGraph& f) {
    g.validate();
    f.validate();
    require_same_palette(g.palette, f.palette);
    return pattern_embeds(g.graph, g.colors, f.graph, f.colors, -1);
}

ColoredPattern ColoredPattern::from(const ColoredGraph& g) {
    g.validate();
    return ColoredPattern{g.graph, g.palette, g.colors};
}

bool ColoredPattern::all_free() const {
    return fixed_count() == 0;
}

int ColoredPattern::fixed_count() const {
    int n = 0;
    for (int c : colors)
        if (c >= 0) ++n;
    return n;
}

long long ColoredPattern::expansion_count() const {
    const long long base = static_cast<long long>(palette.size());
    long long out = 1;
    for (int c : colors) {
        if (c >= 0) continue;
        if (out > (1ll << 62) / std::max<long long>(base, 1))
            throw std::overflow_error("colored pattern expansion count overflows");
        out *= base;
    }
    return out;
}

void ColoredPattern::validate() const {
    if (static_cast<int>(colors.size()) != graph.size())
        throw std::invalid_argument("colored pattern: one color slot per vertex");
    if (!std::is_sorted(palette.begin(), palette.end()) ||
        std::adjacent_find(palette.begin(), palette.end()) != palette.end())
        throw std::invalid_argument("colored pattern: palette not normalized");
    for (int c : colors)
        if (c < -1 || c >= static_cast<int>(palette.size()))
            throw std::invalid_argument("colored pattern: color outside palette");
}

bool colored_occurs(const ColoredGraph& g, const ColoredPattern& f) {
    g.validate();
    f.validate();
    require_same_palette(g.palette, f.palette);
    return pattern_embeds(g.graph, g.colors, f.graph, f.colors, -1);
}

std::optional<std::vector<int>> solve_coloring(const Graph& g,
                                               const std::vector<std::string>& palette,
                                               const std::vector<ColoredPattern>& family) {
    const int n = g.size();
    const int c = static_cast<int>(palette.size());
    std::vector<const ColoredPattern*> constrained;
    for (const auto& f : family) {
        f.validate();
        require_same_palette(palette, f.palette);
        if (f.graph.size() == 0) return std::nullopt;  // empty pattern occurs everywhere
        if (f.all_free()) {
            // a fully free pattern forbids its graph under every coloring
            if (pattern_embeds(g, kNoColors, f.graph, kNoColors, -1)) return std::nullopt;
        } else if (f.graph.size() <= n) {
            constrained.push_back(&f);
        }
    }
    if (n == 0) return std::vector<int>{};
    if (c == 0) return std::nullopt;

    std::vector<int> colors(n, -1);
    std::function<bool(int)> assign = [&](int v) -> bool {
        if (v == n) return true;
        for (int col = 0; col < c; ++col) {
            colors[v] = col;
            bool ok = true;
            for (const auto* f : constrained)
                if (pattern_embeds(g, colors, f->graph, f->colors, v)) { ok = false; break; }
            if (ok && assign(v + 1)) return true;
        }
        colors[v] = -1;
        return false;
    };
    if (!assign(0)) return std::nullopt;
    return colors;
}

std::optional<std::vector<int>> solve_coloring(const Graph& g,
                                               const std::vector<std::string>& palette,
                                               const std::vector<ColoredGraph>& family) {
    std::vector<ColoredPattern> pats;
    pats.reserve(family.size());
    for (const auto& f : family) pats.push_back(ColoredPattern::from(f));
    return solve_coloring(g, palette, pats);
}

bool subgraph_occurs(const Graph& g, const Graph& f) {
    return pattern_embeds(g, kNoColors, f, kNoColors, -1);
}

}  // namespace ordpat
