#pragma once

#include <optional>

#include "ordpat/relcore.hpp"

namespace ordpat {

struct TupleRef {
    int symbol = 0;
    int index = 0;  // index into tuples(symbol) of the structure at hand
    friend auto operator<=>(const TupleRef&, const TupleRef&) = default;
};

/// Alternating cycle x_0, r_1, x_1, ..., r_t, x_t = x_0 of distinct elements
/// and distinct tuples, where x_i lies in r_i and r_{i+1}. The degenerate
/// form is t = 1 with a tuple having a repeated coordinate.
struct StructCycle {
    std::vector<int> elements;     // x_0 .. x_{t-1}
    std::vector<TupleRef> tuples;  // r_1 .. r_t

    int length() const { return static_cast<int>(tuples.size()); }
};

bool cycle_valid(const RelStructure& s, const StructCycle& c);

/// A minimum-length cycle, or nullopt when s is a forest.
std::optional<StructCycle> shortest_cycle(const RelStructure& s);

/// A shortest cycle among those of length < bound, or nullopt when none.
std::optional<StructCycle> shortest_cycle_below(const RelStructure& s, int bound);

/// Cycle length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const RelStructure& s);

/// Remove tuples until every cycle has length >= g: repeatedly find a
/// shortest cycle (deterministic scan) and remove its lexicographically
/// least tuple, compared as (symbol, tuple contents).
RelStructure raise_girth(const RelStructure& s, int g);

}  // namespace ordpat
