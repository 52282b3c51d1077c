#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ordpat/reductions.hpp"
#include "ordpat/relcore.hpp"
#include "ordpat/rng.hpp"

// Brute-force oracles, independent of the implementation paths they check.
namespace ordpat::testing {

/// Canonical rank sequences of length n by filtering {1..n}^n.
std::vector<std::vector<int>> brute_rank_sequences(int n);

/// Exact temporal solve by enumerating every weak order.
std::optional<WeakOrderWitness> brute_temporal(const RelStructure& s, const TemporalStructure& t);

/// Proper k-colorability by backtracking on adjacent-different constraints.
bool chromatic_at_most(const Graph& g, int k);

/// NAE 2-coloring: some coloring leaves no hyperedge monochromatic.
bool nae_colorable(const Hypergraph3& h);

/// Minimum cycle length by exhaustive alternating-walk search.
std::optional<int> brute_girth(const RelStructure& s);

/// All graphs on exactly n vertices, one per isomorphism class.
std::vector<Graph> graphs_up_to_iso(int n);

Graph random_graph(int n, double edge_probability, Rng& rng);

/// Ordering solver over all n! orders with a from-scratch occurrence check.
std::optional<std::vector<int>> brute_solve_ordering(const Graph& g,
                                                     const std::vector<OrderedGraph>& family,
                                                     bool induced);

/// Coloring solver over all palette^n colorings.
std::optional<std::vector<int>> brute_solve_coloring(const Graph& g,
                                                     const std::vector<std::string>& palette,
                                                     const std::vector<ColoredGraph>& family);

bool structures_isomorphic(const RelStructure& a, const RelStructure& b);

/// Injective color-preserving homomorphism between colored structures.
bool colored_structure_occurs(const ColoredStructure& host, const ColoredStructure& pat);

/// Some total coloring of t avoids every pattern.
bool structure_colorable(const RelStructure& t, const std::vector<std::string>& palette,
                         const std::vector<ColoredStructure>& patterns);

/// K4 minus the edge {0,2}, naturally ordered (the four-vertex example).
OrderedGraph example_pattern();

/// Monotone path: vertices 0..k-1 in natural order, edges (i, i+1).
OrderedGraph monotone_path(int vertices);

Graph complete(int n);

}  // namespace ordpat::testing
