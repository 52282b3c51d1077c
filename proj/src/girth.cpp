#include "ordpat/girth.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <stdexcept>

namespace ordpat {

namespace {

struct Incidence {
    // nodes: elements 0..n-1, then one node per tuple (symbols in order)
    std::vector<TupleRef> tuple_of_node;            // node - n -> TupleRef
    std::vector<std::vector<int>> adj;              // sorted
    int element_count = 0;

    explicit Incidence(const RelStructure& s) {
        element_count = s.size();
        int nodes = s.size();
        for (int sym = 0; sym < s.symbol_count(); ++sym)
            nodes += static_cast<int>(s.tuples(sym).size());
        adj.resize(nodes);
        int tn = s.size();
        for (int sym = 0; sym < s.symbol_count(); ++sym)
            for (int idx = 0; idx < static_cast<int>(s.tuples(sym).size()); ++idx, ++tn) {
                tuple_of_node.push_back(TupleRef{sym, idx});
                Tuple distinct = s.tuples(sym)[idx];
                std::sort(distinct.begin(), distinct.end());
                distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
                for (int x : distinct) {
                    adj[tn].push_back(x);
                    adj[x].push_back(tn);
                }
            }
    }
};

std::optional<StructCycle> degenerate_cycle(const RelStructure& s) {
    for (int sym = 0; sym < s.symbol_count(); ++sym)
        for (int idx = 0; idx < static_cast<int>(s.tuples(sym).size()); ++idx) {
            const Tuple& t = s.tuples(sym)[idx];
            Tuple sorted(t);
            std::sort(sorted.begin(), sorted.end());
            auto it = std::adjacent_find(sorted.begin(), sorted.end());
            if (it != sorted.end())
                return StructCycle{{*it}, {TupleRef{sym, idx}}};
        }
    return std::nullopt;
}

StructCycle cycle_from_walk(const Incidence& inc, const std::vector<int>& parent, int u, int w) {
    // tree paths root..u and root..w plus edge (u, w); at the minimum the
    // paths share only the root, so this is a simple incidence cycle
    std::vector<int> pu, pw;
    for (int x = u; x != -1; x = parent[x]) pu.push_back(x);
    for (int x = w; x != -1; x = parent[x]) pw.push_back(x);
    std::reverse(pu.begin(), pu.end());  // root .. u
    std::vector<int> nodes = pu;         // root .. u, then w .. just-below-root
    for (size_t i = 0; i + 1 < pw.size(); ++i) nodes.push_back(pw[i]);
    // rotate so nodes[0] is an element node
    size_t start = 0;
    while (nodes[start] >= inc.element_count) ++start;
    std::rotate(nodes.begin(), nodes.begin() + start, nodes.end());

    StructCycle c;
    for (size_t i = 0; i < nodes.size(); i += 2) c.elements.push_back(nodes[i]);
    for (size_t i = 1; i < nodes.size(); i += 2) c.tuples.push_back(inc.tuple_of_node[nodes[i] - inc.element_count]);
    return c;
}

// Shortest cycle of structure length < bound via BFS on the incidence
// graph from every element node. A structure cycle of length t is an
// incidence cycle of length 2t.
std::optional<StructCycle> bounded_shortest(const RelStructure& s, int bound) {
    if (bound <= 1) return std::nullopt;
    if (auto d = degenerate_cycle(s)) return d;
    if (bound == 2) return std::nullopt;

    Incidence inc(s);
    const int nodes = static_cast<int>(inc.adj.size());
    int best_len = bound;  // structure length; want strictly less
    std::optional<StructCycle> best;

    std::vector<int> dist(nodes), parent(nodes), seen(nodes, -1);
    for (int root = 0; root < inc.element_count; ++root) {
        std::deque<int> queue{root};
        seen[root] = root;
        dist[root] = 0;
        parent[root] = -1;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            // an incidence cycle through the root of length 2t has all its
            // nodes within distance t of the root
            if (dist[u] >= best_len) continue;
            for (int w : inc.adj[u]) {
                if (w == parent[u]) continue;
                if (seen[w] != root) {
                    seen[w] = root;
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else {
                    // non-tree edge: closed walk of incidence length
                    // dist[u] + dist[w] + 1 (even, since bipartite)
                    int t = (dist[u] + dist[w] + 1) / 2;
                    if (t < best_len) {
                        StructCycle c = cycle_from_walk(inc, parent, u, w);
                        if (cycle_valid(s, c) && c.length() == t) {
                            best_len = t;
                            best = std::move(c);
                        }
                    }
                }
            }
        }
    }
    return best;
}

}  // namespace

bool cycle_valid(const RelStructure& s, const StructCycle& c) {
    const int t = c.length();
    if (t < 1 || static_cast<int>(c.elements.size()) != t) return false;
    for (const auto& r : c.tuples) {
        if (r.symbol < 0 || r.symbol >= s.symbol_count()) return false;
        if (r.index < 0 || r.index >= static_cast<int>(s.tuples(r.symbol).size())) return false;
    }
    if (t == 1) {
        const Tuple& tp = s.tuples(c.tuples[0].symbol)[c.tuples[0].index];
        int x = c.elements[0];
        return std::count(tp.begin(), tp.end(), x) >= 2;
    }
    std::vector<int> elems = c.elements;
    std::sort(elems.begin(), elems.end());
    if (std::adjacent_find(elems.begin(), elems.end()) != elems.end()) return false;
    std::vector<TupleRef> refs = c.tuples;
    std::sort(refs.begin(), refs.end());
    if (std::adjacent_find(refs.begin(), refs.end()) != refs.end()) return false;
    for (int i = 0; i < t; ++i) {
        const Tuple& tp = s.tuples(c.tuples[i].symbol)[c.tuples[i].index];
        int a = c.elements[i], b = c.elements[(i + 1) % t];
        if (std::find(tp.begin(), tp.end(), a) == tp.end()) return false;
        if (std::find(tp.begin(), tp.end(), b) == tp.end()) return false;
    }
    return true;
}

std::optional<StructCycle> shortest_cycle(const RelStructure& s) {
    return bounded_shortest(s, INT_MAX);
}

std::optional<StructCycle> shortest_cycle_below(const RelStructure& s, int bound) {
    return bounded_shortest(s, bound);
}

std::optional<int> girth(const RelStructure& s) {
    auto c = shortest_cycle(s);
    if (!c) return std::nullopt;
    return c->length();
}

RelStructure raise_girth(const RelStructure& s, int g) {
    if (g < 1) throw std::invalid_argument("raise_girth: g must be >= 1");
    RelStructure out = s;
    while (auto c = shortest_cycle_below(out, g)) {
        // remove the lexicographically least tuple of the cycle,
        // compared as (symbol, contents)
        int pick = 0;
        auto key = [&](int i) {
            const auto& r = c->tuples[i];
            return std::pair<int, const Tuple&>(r.symbol, out.tuples(r.symbol)[r.index]);
        };
        for (int i = 1; i < c->length(); ++i)
            if (key(i) < key(pick)) pick = i;
        const auto& r = c->tuples[pick];
        Tuple doomed = out.tuples(r.symbol)[r.index];
        out.remove_tuple(r.symbol, doomed);
    }
    return out;
}

}  // namespace ordpat
