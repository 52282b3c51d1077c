#include "ordpat/relcore.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace ordpat {

// ---- Signature ----

int Signature::max_arity() const {
    int r = 0;
    for (const auto& s : symbols) r = std::max(r, s.arity);
    return r;
}

int Signature::index_of(const std::string& name) const {
    for (size_t i = 0; i < symbols.size(); ++i)
        if (symbols[i].name == name) return static_cast<int>(i);
    return -1;
}

void Signature::validate() const {
    std::set<std::string> seen;
    for (const auto& s : symbols) {
        if (s.name.empty()) throw std::invalid_argument("signature: empty symbol name");
        if (s.arity < 1) throw std::invalid_argument("signature: arity of " + s.name + " must be >= 1");
        if (!seen.insert(s.name).second)
            throw std::invalid_argument("signature: duplicate symbol " + s.name);
    }
}

// ---- RelStructure ----

RelStructure::RelStructure(Signature sig, int size) : sig_(std::move(sig)), size_(size) {
    sig_.validate();
    if (size < 0) throw std::invalid_argument("structure: negative size");
    tuples_.resize(sig_.symbols.size());
}

bool RelStructure::add_tuple(int symbol, Tuple t) {
    if (symbol < 0 || symbol >= symbol_count()) throw std::out_of_range("structure: bad symbol index");
    if (static_cast<int>(t.size()) != sig_.symbols[symbol].arity)
        throw std::invalid_argument("structure: tuple length does not match arity of " +
                                    sig_.symbols[symbol].name);
    for (int x : t)
        if (x < 0 || x >= size_)
            throw std::invalid_argument("structure: tuple index out of range in " +
                                        sig_.symbols[symbol].name);
    auto& ts = tuples_[symbol];
    auto it = std::lower_bound(ts.begin(), ts.end(), t);
    if (it != ts.end() && *it == t) return false;
    ts.insert(it, std::move(t));
    return true;
}

bool RelStructure::remove_tuple(int symbol, const Tuple& t) {
    auto& ts = tuples_.at(symbol);
    auto it = std::lower_bound(ts.begin(), ts.end(), t);
    if (it == ts.end() || *it != t) return false;
    ts.erase(it);
    return true;
}

bool RelStructure::has_tuple(int symbol, const Tuple& t) const {
    const auto& ts = tuples_.at(symbol);
    return std::binary_search(ts.begin(), ts.end(), t);
}

long long RelStructure::tuple_count() const {
    long long n = 0;
    for (const auto& ts : tuples_) n += static_cast<long long>(ts.size());
    return n;
}

void RelStructure::validate() const {
    sig_.validate();
    if (size_ < 0) throw std::invalid_argument("structure: negative size");
    if (tuples_.size() != sig_.symbols.size())
        throw std::invalid_argument("structure: tuple sets do not match signature");
    for (size_t s = 0; s < tuples_.size(); ++s) {
        const int arity = sig_.symbols[s].arity;
        const Tuple* prev = nullptr;
        for (const auto& t : tuples_[s]) {
            if (static_cast<int>(t.size()) != arity)
                throw std::invalid_argument("structure: tuple length mismatch in " + sig_.symbols[s].name);
            for (int x : t)
                if (x < 0 || x >= size_)
                    throw std::invalid_argument("structure: tuple index out of range in " +
                                                sig_.symbols[s].name);
            if (prev && !(*prev < t))
                throw std::invalid_argument("structure: duplicate tuple in " + sig_.symbols[s].name);
            prev = &t;
        }
    }
}

// ---- Graph ----

Graph::Graph(int size) : size_(size) {
    if (size < 0) throw std::invalid_argument("graph: negative size");
    adj_.resize(size);
}

bool Graph::add_edge(int u, int v) {
    if (u < 0 || u >= size_ || v < 0 || v >= size_)
        throw std::invalid_argument("graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("graph: loops are not allowed");
    if (u > v) std::swap(u, v);
    std::pair<int, int> e{u, v};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it != edges_.end() && *it == e) return false;
    edges_.insert(it, e);
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    return true;
}

bool Graph::adjacent(int u, int v) const {
    const auto& nu = adj_.at(u);
    return std::binary_search(nu.begin(), nu.end(), v);
}

// ---- OrderedGraph ----

void OrderedGraph::validate() const {
    const int n = graph.size();
    if (static_cast<int>(positions.size()) != n)
        throw std::invalid_argument("ordered graph: positions length mismatch");
    std::vector<char> seen(n, 0);
    for (int p : positions) {
        if (p < 0 || p >= n || seen[p]) throw std::invalid_argument("ordered graph: positions not a permutation");
        seen[p] = 1;
    }
}

std::vector<int> OrderedGraph::vertices_in_order() const {
    std::vector<int> at(positions.size());
    for (size_t v = 0; v < positions.size(); ++v) at[positions[v]] = static_cast<int>(v);
    return at;
}

Graph OrderedGraph::canonical() const {
    Graph out(graph.size());
    for (auto [u, v] : graph.edges()) out.add_edge(positions[u], positions[v]);
    return out;
}

// ---- ColoredGraph ----

void ColoredGraph::normalize() {
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

void ColoredGraph::validate() const {
    if (static_cast<int>(colors.size()) != graph.size())
        throw std::invalid_argument("colored graph: every vertex needs a color");
    if (!std::is_sorted(palette.begin(), palette.end()) ||
        std::adjacent_find(palette.begin(), palette.end()) != palette.end())
        throw std::invalid_argument("colored graph: palette not normalized");
    for (int c : colors)
        if (c < 0 || c >= static_cast<int>(palette.size()))
            throw std::invalid_argument("colored graph: color outside palette");
}

// ---- RankPattern ----

RankPattern RankPattern::of_values(const std::vector<int>& values) {
    std::vector<int> sorted(values);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    RankPattern p;
    p.ranks.reserve(values.size());
    for (int v : values) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
        p.ranks.push_back(static_cast<int>(it - sorted.begin()) + 1);
    }
    return p;
}

int RankPattern::width() const {
    int m = 0;
    for (int r : ranks) m = std::max(m, r);
    return m;
}

bool RankPattern::canonical() const {
    const int m = width();
    std::vector<char> seen(m + 1, 0);
    for (int r : ranks) {
        if (r < 1 || r > m) return false;
        seen[r] = 1;
    }
    for (int r = 1; r <= m; ++r)
        if (!seen[r]) return false;
    return true;
}

bool RankPattern::repeat_free() const {
    return width() == length();
}

// ---- TemporalStructure ----

TemporalStructure::TemporalStructure(Signature sig) : sig_(std::move(sig)) {
    sig_.validate();
    allowed_.resize(sig_.symbols.size());
}

bool TemporalStructure::add_allowed(int symbol, RankPattern p) {
    if (symbol < 0 || symbol >= symbol_count()) throw std::out_of_range("temporal: bad symbol index");
    if (p.length() != sig_.symbols[symbol].arity)
        throw std::invalid_argument("temporal: pattern length does not match arity of " +
                                    sig_.symbols[symbol].name);
    if (!p.canonical()) throw std::invalid_argument("temporal: pattern not canonical");
    auto& ps = allowed_[symbol];
    auto it = std::lower_bound(ps.begin(), ps.end(), p);
    if (it != ps.end() && *it == p) return false;
    ps.insert(it, std::move(p));
    return true;
}

bool TemporalStructure::allows(int symbol, const RankPattern& p) const {
    if (symbol < 0 || symbol >= symbol_count()) throw std::out_of_range("temporal: bad symbol index");
    if (p.length() != sig_.symbols[symbol].arity)
        throw std::invalid_argument("temporal: pattern length does not match arity of " +
                                    sig_.symbols[symbol].name);
    const auto& ps = allowed_[symbol];
    return std::binary_search(ps.begin(), ps.end(), p);
}

void TemporalStructure::validate() const {
    sig_.validate();
    if (allowed_.size() != sig_.symbols.size())
        throw std::invalid_argument("temporal: allowed sets do not match signature");
    for (size_t s = 0; s < allowed_.size(); ++s)
        for (const auto& p : allowed_[s]) {
            if (p.length() != sig_.symbols[s].arity)
                throw std::invalid_argument("temporal: pattern length mismatch in " + sig_.symbols[s].name);
            if (!p.canonical())
                throw std::invalid_argument("temporal: non-canonical pattern in " + sig_.symbols[s].name);
        }
}

// ---- WeakOrderWitness ----

WeakOrderWitness WeakOrderWitness::from_ranks(std::vector<int> raw) {
    RankPattern p = RankPattern::of_values(raw);
    return WeakOrderWitness{std::move(p.ranks)};
}

bool WeakOrderWitness::linear() const {
    RankPattern p{ranks};
    return p.repeat_free();
}

void WeakOrderWitness::validate() const {
    RankPattern p{ranks};
    if (!p.canonical()) throw std::invalid_argument("witness: ranks must use exactly {1..m}");
}

RankPattern tuple_pattern(const WeakOrderWitness& w, const Tuple& t) {
    std::vector<int> vals;
    vals.reserve(t.size());
    for (int x : t) vals.push_back(w.ranks.at(x));
    return RankPattern::of_values(vals);
}

std::vector<RankPattern> all_rank_patterns(int length) {
    if (length < 0) throw std::invalid_argument("rank patterns: negative length");
    std::vector<RankPattern> out;
    std::vector<int> ranks(length, 0);
    // grow a weak order one element at a time: join an existing rank or
    // open a new one at any position
    std::function<void(int, int)> grow = [&](int i, int width) {
        if (i == length) {
            out.push_back(RankPattern{ranks});
            return;
        }
        for (int r = 1; r <= width; ++r) {
            ranks[i] = r;
            grow(i + 1, width);
        }
        for (int at = 1; at <= width + 1; ++at) {
            // new rank value `at`: shift existing ranks >= at up by one
            for (int j = 0; j < i; ++j)
                if (ranks[j] >= at) ++ranks[j];
            ranks[i] = at;
            grow(i + 1, width + 1);
            for (int j = 0; j < i; ++j)
                if (ranks[j] > at) --ranks[j];
        }
        ranks[i] = 0;
    };
    grow(0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

// ---- operations ----

int max_degree(const RelStructure& s) {
    std::vector<int> count(s.size(), 0);
    for (int sym = 0; sym < s.symbol_count(); ++sym)
        for (const auto& t : s.tuples(sym)) {
            Tuple distinct(t);
            std::sort(distinct.begin(), distinct.end());
            distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
            for (int x : distinct) ++count[x];
        }
    int m = 0;
    for (int c : count) m = std::max(m, c);
    return m;
}

bool is_homomorphism(const RelStructure& a, const RelStructure& b, const std::vector<int>& map) {
    if (a.signature() != b.signature()) throw std::invalid_argument("signature mismatch");
    if (static_cast<int>(map.size()) != a.size()) return false;
    for (int x : map)
        if (x < 0 || x >= b.size()) return false;
    for (int sym = 0; sym < a.symbol_count(); ++sym)
        for (const auto& t : a.tuples(sym)) {
            Tuple image;
            image.reserve(t.size());
            for (int x : t) image.push_back(map[x]);
            if (!b.has_tuple(sym, image)) return false;
        }
    return true;
}

namespace {

// Tuples grouped by their largest element, for incremental checks while
// elements are assigned in index order.
std::vector<std::vector<std::pair<int, const Tuple*>>> tuples_by_max(const RelStructure& s) {
    std::vector<std::vector<std::pair<int, const Tuple*>>> by_max(s.size());
    for (int sym = 0; sym < s.symbol_count(); ++sym)
        for (const auto& t : s.tuples(sym)) {
            int m = *std::max_element(t.begin(), t.end());
            by_max[m].emplace_back(sym, &t);
        }
    return by_max;
}

}  // namespace

std::optional<std::vector<int>> hom_exists(const RelStructure& a, const RelStructure& b,
                                           bool injective) {
    if (a.signature() != b.signature()) throw std::invalid_argument("signature mismatch");
    const int n = a.size();
    if (n == 0) return std::vector<int>{};
    if (injective && n > b.size()) return std::nullopt;
    auto by_max = tuples_by_max(a);
    std::vector<int> map(n, -1);
    std::vector<char> used(b.size(), 0);

    std::function<bool(int)> place = [&](int e) -> bool {
        if (e == n) return true;
        for (int y = 0; y < b.size(); ++y) {
            if (injective && used[y]) continue;
            map[e] = y;
            bool ok = true;
            for (auto [sym, t] : by_max[e]) {
                Tuple image;
                image.reserve(t->size());
                for (int x : *t) image.push_back(map[x]);
                if (!b.has_tuple(sym, image)) { ok = false; break; }
            }
            if (ok) {
                if (injective) used[y] = 1;
                if (place(e + 1)) return true;
                if (injective) used[y] = 0;
            }
        }
        map[e] = -1;
        return false;
    };
    if (place(0)) return map;
    return std::nullopt;
}

bool temporal_tuple_allowed(const TemporalStructure& t, int symbol, const RankPattern& p) {
    return t.allows(symbol, p);
}

TemporalSearchResult temporal_hom_search(const RelStructure& s, const TemporalStructure& t,
                                         long long node_budget) {
    if (s.signature() != t.signature()) throw std::invalid_argument("signature mismatch");
    TemporalSearchResult res;
    const int n = s.size();
    auto by_max = tuples_by_max(s);

    std::vector<std::vector<int>> blocks;  // ordered blocks of placed elements
    std::vector<int> rank(n, 0);           // 1-based block index, 0 = unplaced
    bool out_of_budget = false;

    auto check_elem = [&](int e) {
        for (auto [sym, tp] : by_max[e]) {
            std::vector<int> vals;
            vals.reserve(tp->size());
            for (int x : *tp) vals.push_back(rank[x]);
            if (!t.allows(sym, RankPattern::of_values(vals))) return false;
        }
        return true;
    };

    std::function<bool(int)> place = [&](int e) -> bool {
        if (e == n) return true;
        const int nb = static_cast<int>(blocks.size());
        for (int pos = 0; pos <= 2 * nb; ++pos) {
            if (node_budget > 0 && res.nodes >= node_budget) { out_of_budget = true; return false; }
            ++res.nodes;
            if (pos % 2 == 0) {
                // new block before block pos/2 (== append when pos/2 == nb)
                const int bi = pos / 2;
                for (int j = bi; j < nb; ++j)
                    for (int x : blocks[j]) ++rank[x];
                blocks.insert(blocks.begin() + bi, {e});
                rank[e] = bi + 1;
                if (check_elem(e) && place(e + 1)) return true;
                blocks.erase(blocks.begin() + bi);
                for (int j = bi; j < nb; ++j)
                    for (int x : blocks[j]) --rank[x];
                rank[e] = 0;
            } else {
                const int bi = pos / 2;
                blocks[bi].push_back(e);
                rank[e] = bi + 1;
                if (check_elem(e) && place(e + 1)) return true;
                blocks[bi].pop_back();
                rank[e] = 0;
            }
            if (out_of_budget) return false;
        }
        return false;
    };

    if (place(0)) {
        WeakOrderWitness w{rank};
        w.validate();
        res.status = SearchStatus::found;
        res.witness = std::move(w);
    } else {
        res.status = out_of_budget ? SearchStatus::budget : SearchStatus::exhausted;
    }
    return res;
}

std::optional<WeakOrderWitness> temporal_hom_exists(const RelStructure& s,
                                                    const TemporalStructure& t) {
    return temporal_hom_search(s, t, 0).witness;
}

bool witness_valid(const RelStructure& s, const TemporalStructure& t, const WeakOrderWitness& w) {
    if (s.signature() != t.signature()) throw std::invalid_argument("signature mismatch");
    if (static_cast<int>(w.ranks.size()) != s.size()) return false;
    for (int sym = 0; sym < s.symbol_count(); ++sym)
        for (const auto& tp : s.tuples(sym))
            if (!t.allows(sym, tuple_pattern(w, tp))) return false;
    return true;
}

std::optional<WeakOrderWitness> linearize_witness(const RelStructure& s,
                                                  const TemporalStructure& t,
                                                  const WeakOrderWitness& w) {
    w.validate();
    if (!witness_valid(s, t, w)) throw std::invalid_argument("linearize: witness does not validate");
    if (w.linear()) return w;

    const int n = s.size();
    RankPattern wp{w.ranks};
    const int m = wp.width();
    std::vector<std::vector<int>> classes(m);
    for (int x = 0; x < n; ++x) classes[w.ranks[x] - 1].push_back(x);
    std::vector<int> offset(m, 0);
    for (int c = 1; c < m; ++c) offset[c] = offset[c - 1] + static_cast<int>(classes[c - 1].size());

    // A tuple can be re-checked once all its classes are refined.
    std::vector<std::vector<std::pair<int, const Tuple*>>> by_last_class(m);
    for (int sym = 0; sym < s.symbol_count(); ++sym)
        for (const auto& tp : s.tuples(sym)) {
            int last = 0;
            for (int x : tp) last = std::max(last, w.ranks[x] - 1);
            by_last_class[last].emplace_back(sym, &tp);
        }

    std::vector<int> final_rank(n, 0);
    std::function<bool(int)> refine = [&](int c) -> bool {
        if (c == m) return true;
        std::vector<int> perm = classes[c];  // ascending = lexicographically least first
        do {
            for (size_t i = 0; i < perm.size(); ++i) final_rank[perm[i]] = offset[c] + static_cast<int>(i) + 1;
            bool ok = true;
            for (auto [sym, tp] : by_last_class[c]) {
                std::vector<int> vals;
                vals.reserve(tp->size());
                for (int x : *tp) vals.push_back(final_rank[x]);
                if (!t.allows(sym, RankPattern::of_values(vals))) { ok = false; break; }
            }
            if (ok && refine(c + 1)) return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return false;
    };

    if (!refine(0)) return std::nullopt;
    WeakOrderWitness out{final_rank};
    out.validate();
    return out;
}

BlowUp blow_up(const RelStructure& s, int n) {
    if (n < 1) throw std::invalid_argument("blow_up: n must be >= 1");
    BlowUp out;
    out.structure = RelStructure(s.signature(), s.size() * n);
    out.projection.resize(s.size() * n);
    for (int x = 0; x < s.size(); ++x)
        for (int j = 0; j < n; ++j) out.projection[x * n + j] = x;
    for (int sym = 0; sym < s.symbol_count(); ++sym) {
        for (const auto& t : s.tuples(sym)) {
            const int k = static_cast<int>(t.size());
            std::vector<int> odo(k, 0);
            while (true) {
                Tuple lifted(k);
                for (int i = 0; i < k; ++i) lifted[i] = t[i] * n + odo[i];
                out.structure.add_tuple(sym, lifted);
                int i = k - 1;
                while (i >= 0 && odo[i] == n - 1) { odo[i] = 0; --i; }
                if (i < 0) break;
                ++odo[i];
            }
        }
    }
    return out;
}

}  // namespace ordpat
