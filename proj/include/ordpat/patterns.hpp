#pragma once

#include <optional>

#include "ordpat/relcore.hpp"

namespace ordpat {

/// Order-preserving injective occurrence of f in g; with induced also
/// non-edges must map to non-edges.
bool ordered_occurs(const OrderedGraph& g, const OrderedGraph& f, bool induced);

/// A vertex order of g avoiding every family pattern, or nullopt. Exact;
/// vertices are placed into positions left to right, lexicographically,
/// checking only occurrences whose maximum position is the newest.
std::optional<std::vector<int>> solve_ordering(const Graph& g,
                                               const std::vector<OrderedGraph>& family,
                                               bool induced);

/// All ordered graphs on the same ordered vertex set with a superset of
/// edges, deduplicated up to order-isomorphism.
std::vector<OrderedGraph> supergraph_closure(const std::vector<OrderedGraph>& family);

/// Color-preserving injective occurrence of f in g (edges to edges).
bool colored_occurs(const ColoredGraph& g, const ColoredGraph& f);

/// A colored graph with some colors left free: stands for the set of all
/// total colorings extending the fixed ones. Gadget families of size
/// c^{|G|} stay representable this way.
struct ColoredPattern {
    Graph graph;
    std::vector<std::string> palette;
    std::vector<int> colors;  // palette index, or -1 for free

    static ColoredPattern from(const ColoredGraph& g);
    bool all_free() const;
    int fixed_count() const;
    /// Number of total colorings this pattern stands for (|palette|^#free);
    /// throws when it does not fit in a long long.
    long long expansion_count() const;
    void validate() const;
};

bool colored_occurs(const ColoredGraph& g, const ColoredPattern& f);

/// A total coloring of g (palette indices) avoiding every family member as
/// a colored subgraph, or nullopt. Exact backtracking in vertex index
/// order; patterns with no fixed colors are plain subgraph conditions and
/// are checked up front.
std::optional<std::vector<int>> solve_coloring(const Graph& g,
                                               const std::vector<std::string>& palette,
                                               const std::vector<ColoredPattern>& family);

std::optional<std::vector<int>> solve_coloring(const Graph& g,
                                               const std::vector<std::string>& palette,
                                               const std::vector<ColoredGraph>& family);

/// Injective homomorphism f -> g (subgraph, not induced).
bool subgraph_occurs(const Graph& g, const Graph& f);

}  // namespace ordpat
