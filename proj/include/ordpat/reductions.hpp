#pragma once

#include <array>

#include "ordpat/patterns.hpp"
#include "ordpat/relcore.hpp"

namespace ordpat {

/// 3-uniform hypergraph; hyperedges are sorted 3-sets, kept sorted unique.
struct Hypergraph3 {
    int size = 0;
    std::vector<std::array<int, 3>> hyperedges;

    bool add_hyperedge(int a, int b, int c);
    void validate() const;
    friend bool operator==(const Hypergraph3&, const Hypergraph3&) = default;
};

/// One hyperedge per triangle of g; NAE 2-colorings of the result are
/// exactly the colorings of g with no monochromatic triangle.
Hypergraph3 triangles_to_nae(const Graph& g);

/// Replace every hyperedge by a triangle. Requires girth >= 4 (as a
/// ternary structure), so the triangles of the result are exactly the
/// hyperedge triangles; throws otherwise.
Graph nae_to_triangles(const Hypergraph3& h);

/// h as a relational structure with one ternary symbol E3.
RelStructure hypergraph_as_structure(const Hypergraph3& h);

/// One symbol per pattern, arity |F|; forbidden rank patterns are every
/// repeat pattern plus every linear pattern that orders F into a copy of
/// F^<; the allowed set is the complement.
TemporalStructure patterns_to_temporal(const std::vector<OrderedGraph>& family);

/// Instance over the same signature: per pattern, all tuples that embed
/// the unordered pattern into g (injective homomorphisms, coordinates in
/// pattern order).
RelStructure graph_to_temporal_instance(const Graph& g, const std::vector<OrderedGraph>& family);

struct Gadget {
    Graph graph;
    std::vector<int> roots;  // roots[j]: endpoint of the (j+1)-th pendant path
};

/// Per-symbol gadgets: a K-cycle v_1..v_K with chords v_1 v_{K-1} and
/// v_1 v_{K-2}, plus arity-many disjoint pendant paths of K vertices
/// starting at v_i, ..., v_{i+arity-1} for symbol i; K = |tau| + r + 3.
struct GadgetSpec {
    Signature signature;
    int K = 0;
    std::vector<Gadget> gadgets;
};

GadgetSpec build_gadgets(const Signature& sig);

struct RootedGraph {
    Graph graph;
    int base_size = 0;  // vertices 0..base_size-1 are the structure's elements
};

/// Base set plus a fresh gadget copy per tuple, sharing only roots; the
/// j-th path end of a copy is the tuple's j-th coordinate.
RootedGraph structure_to_graph(const RelStructure& t);

/// Relational structure with a total element coloring (a lift).
struct ColoredStructure {
    RelStructure structure;
    std::vector<std::string> palette;
    std::vector<int> colors;

    void normalize();
    void validate() const;
    friend bool operator==(const ColoredStructure&, const ColoredStructure&) = default;
};

/// The three forbidden families of the gadget reduction, in compact form:
/// (1) each gadget plus one extra edge, colors free; (2) each gadget plus a
/// pendant vertex at a non-root, colors free; (3) per pattern S', the glued
/// gadget graph with the base colored as S' and the rest free.
std::vector<ColoredPattern> forbidden_family(const Signature& sig,
                                             const std::vector<std::string>& palette,
                                             const std::vector<ColoredStructure>& patterns);

struct StructureVerdict {
    bool no = false;          // a gadget copy has an extra edge or pendant at a non-root
    RelStructure structure;   // meaningful when !no
    std::vector<int> universe_vertices;  // root-image vertices, ascending
};

/// Backward reduction: find gadget copies (homomorphisms injective on
/// non-roots), refuse early when a copy carries an extra edge at a
/// non-root, otherwise recover the structure on the root images.
StructureVerdict graph_to_structure(const Graph& g, const Signature& sig);

/// The four ordered families of the star reduction for palette size c and
/// clique size m: (1) K_m plus an attached vertex, every ordering; (2) K_m
/// plus an isolated vertex neither first nor last; (3) c interval copies of
/// K_m; (4) per colored pattern, its starred graph ordered class-by-class
/// with K_m interval separators, every order inside a class.
std::vector<OrderedGraph> ordering_family(const std::vector<std::string>& palette,
                                          const std::vector<ColoredGraph>& colored_family,
                                          int m);

/// Smallest m with K_m uncolorable for the family; throws past the cap.
int find_min_forbidden_clique(const std::vector<std::string>& palette,
                              const std::vector<ColoredGraph>& colored_family, int cap);

/// g plus (c-1) disjoint copies of K_m, appended after g's vertices.
Graph star(const Graph& g, int num_colors, int m);

struct UnstarResult {
    enum class Verdict { graph, yes, no };
    Verdict verdict = Verdict::graph;
    Graph remainder;  // meaningful when verdict == graph
};

/// Inverse of star with early verdicts: NO when a K_m copy has an incident
/// outside edge or there are >= c disjoint copies, YES when fewer than c-1
/// copies, otherwise strips the c-1 K_m components.
UnstarResult unstar(const Graph& g, int num_colors, int m);

}  // namespace ordpat
