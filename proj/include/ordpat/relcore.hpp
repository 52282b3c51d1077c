#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ordpat {

using Tuple = std::vector<int>;

struct Symbol {
    std::string name;
    int arity = 0;
    friend bool operator==(const Symbol&, const Symbol&) = default;
};

/// Relational type: an ordered list of named symbols with arities.
/// Symbol order is significant; it fixes tuple-set indices everywhere.
struct Signature {
    std::vector<Symbol> symbols;

    int max_arity() const;
    int index_of(const std::string& name) const;  // -1 when absent
    void validate() const;                        // unique names, arities >= 1
    friend bool operator==(const Signature&, const Signature&) = default;
};

/// Finite relational structure over universe {0, ..., size-1}.
/// Tuple sets are kept sorted and duplicate-free (set semantics).
class RelStructure {
public:
    RelStructure() = default;
    RelStructure(Signature sig, int size);

    const Signature& signature() const { return sig_; }
    int size() const { return size_; }
    int symbol_count() const { return static_cast<int>(sig_.symbols.size()); }
    const std::vector<Tuple>& tuples(int symbol) const { return tuples_.at(symbol); }

    bool add_tuple(int symbol, Tuple t);  // false when already present
    bool remove_tuple(int symbol, const Tuple& t);
    bool has_tuple(int symbol, const Tuple& t) const;
    long long tuple_count() const;

    void validate() const;
    friend bool operator==(const RelStructure& a, const RelStructure& b) {
        return a.sig_ == b.sig_ && a.size_ == b.size_ && a.tuples_ == b.tuples_;
    }

private:
    Signature sig_;
    int size_ = 0;
    std::vector<std::vector<Tuple>> tuples_;
};

/// Simple undirected graph on {0, ..., size-1}; no loops, no multi-edges.
class Graph {
public:
    Graph() = default;
    explicit Graph(int size);

    int size() const { return size_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool add_edge(int u, int v);  // false when already present
    bool adjacent(int u, int v) const;
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.size_ == b.size_ && a.edges_ == b.edges_;
    }
    friend auto operator<=>(const Graph& a, const Graph& b) {
        if (auto c = a.size_ <=> b.size_; c != 0) return c;
        return a.edges_ <=> b.edges_;
    }

private:
    int size_ = 0;
    std::vector<std::pair<int, int>> edges_;  // sorted, first < second
    std::vector<std::vector<int>> adj_;       // sorted neighbor lists
};

/// Graph with a fixed linear order. positions[v] is the 0-based place of
/// vertex v; positions is a permutation of {0, ..., size-1}.
struct OrderedGraph {
    Graph graph;
    std::vector<int> positions;

    void validate() const;
    std::vector<int> vertices_in_order() const;  // inverse permutation
    /// Relabel so that the vertex at place p gets id p. Two ordered graphs
    /// are order-isomorphic iff their canonical graphs are equal.
    Graph canonical() const;
    friend bool operator==(const OrderedGraph&, const OrderedGraph&) = default;
};

/// Graph with a total vertex coloring from a finite palette. normalize()
/// sorts the palette and remaps color indices; all library entry points
/// expect normalized values.
struct ColoredGraph {
    Graph graph;
    std::vector<std::string> palette;
    std::vector<int> colors;  // palette index per vertex

    void normalize();
    void validate() const;
    const std::string& color_name(int v) const { return palette.at(colors.at(v)); }
    friend bool operator==(const ColoredGraph&, const ColoredGraph&) = default;
};

/// Canonical weak-order type of a k-tuple: ranks use exactly {1..m}.
struct RankPattern {
    std::vector<int> ranks;

    static RankPattern of_values(const std::vector<int>& values);
    int length() const { return static_cast<int>(ranks.size()); }
    int width() const;  // number of distinct ranks
    bool canonical() const;
    bool repeat_free() const;  // all ranks distinct
    friend auto operator<=>(const RankPattern&, const RankPattern&) = default;
};

/// Finite presentation of an order-invariant template on the rationals:
/// per symbol, the set of allowed rank patterns of matching length.
class TemporalStructure {
public:
    TemporalStructure() = default;
    explicit TemporalStructure(Signature sig);

    const Signature& signature() const { return sig_; }
    int symbol_count() const { return static_cast<int>(sig_.symbols.size()); }
    const std::vector<RankPattern>& allowed(int symbol) const { return allowed_.at(symbol); }

    bool add_allowed(int symbol, RankPattern p);  // false when already present
    bool allows(int symbol, const RankPattern& p) const;  // throws on arity mismatch

    void validate() const;
    friend bool operator==(const TemporalStructure& a, const TemporalStructure& b) {
        return a.sig_ == b.sig_ && a.allowed_ == b.allowed_;
    }

private:
    Signature sig_;
    std::vector<std::vector<RankPattern>> allowed_;
};

/// Weak order on a structure's universe; ranks[x] in {1..m}, surjective.
struct WeakOrderWitness {
    std::vector<int> ranks;

    static WeakOrderWitness from_ranks(std::vector<int> raw);  // canonicalize
    bool linear() const;
    void validate() const;
    friend bool operator==(const WeakOrderWitness&, const WeakOrderWitness&) = default;
};

/// Rank pattern a tuple induces under a witness.
RankPattern tuple_pattern(const WeakOrderWitness& w, const Tuple& t);

/// All canonical rank patterns of the given length, sorted; there are
/// Fubini-number many.
std::vector<RankPattern> all_rank_patterns(int length);

// ---- operations ----

/// Max over elements of the number of tuples (all symbols) containing it.
int max_degree(const RelStructure& s);

bool is_homomorphism(const RelStructure& a, const RelStructure& b, const std::vector<int>& map);

/// First homomorphism a -> b under lexicographic branching, or nullopt.
std::optional<std::vector<int>> hom_exists(const RelStructure& a, const RelStructure& b,
                                           bool injective = false);

bool temporal_tuple_allowed(const TemporalStructure& t, int symbol, const RankPattern& p);

enum class SearchStatus { found, exhausted, budget };

struct TemporalSearchResult {
    SearchStatus status = SearchStatus::exhausted;
    std::optional<WeakOrderWitness> witness;
    long long nodes = 0;
};

/// Exact weak-order search with per-tuple pruning; branching is
/// lexicographic in element index and insertion position, so repeated runs
/// return identical witnesses. node_budget <= 0 means unlimited.
TemporalSearchResult temporal_hom_search(const RelStructure& s, const TemporalStructure& t,
                                         long long node_budget = 0);

std::optional<WeakOrderWitness> temporal_hom_exists(const RelStructure& s,
                                                    const TemporalStructure& t);

bool witness_valid(const RelStructure& s, const TemporalStructure& t, const WeakOrderWitness& w);

/// Refine ties of a valid witness to a linear order, re-validating.
/// Always succeeds when every allowed pattern is repeat-free.
std::optional<WeakOrderWitness> linearize_witness(const RelStructure& s,
                                                  const TemporalStructure& t,
                                                  const WeakOrderWitness& w);

struct BlowUp {
    RelStructure structure;
    std::vector<int> projection;  // element of the blow-up -> source element
};

/// Full blow-up: universe size*n, element (x, j) gets index x*n + j; a tuple
/// of copies is in a relation iff its projection is.
BlowUp blow_up(const RelStructure& s, int n);

}  // namespace ordpat
