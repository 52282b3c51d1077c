#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include "ordpat/reductions.hpp"
#include "ordpat/relcore.hpp"
#include "ordpat/tsil.hpp"

namespace ordpat {

/// Malformed document; line is 1-based, -1 when unknown.
struct ParseError : std::runtime_error {
    int line;
    ParseError(const std::string& msg, int line_at = -1)
        : std::runtime_error(line_at > 0 ? "line " + std::to_string(line_at) + ": " + msg : msg),
          line(line_at) {}
};

using Artifact =
    std::variant<Graph, OrderedGraph, ColoredGraph, RelStructure, TemporalStructure, Hypergraph3>;

/// Parse any of the six artifact kinds from the canonical JSON format.
/// Documents are strict: duplicate tuples/edges or out-of-range indices
/// are diagnosed by name.
Artifact parse_artifact(const std::string& text);

std::string artifact_kind(const Artifact& a);

std::string serialize(const Graph& g);
std::string serialize(const OrderedGraph& g);
std::string serialize(const ColoredGraph& g);
std::string serialize(const RelStructure& s);
std::string serialize(const TemporalStructure& t);
std::string serialize(const Hypergraph3& h);
std::string serialize(const Artifact& a);
std::string serialize(const WeakOrderWitness& w);
std::string serialize(const ColoredStructure& s);
std::string serialize(const SilInstance& inst);
std::string serialize_ordered_family(const std::vector<OrderedGraph>& family);
std::string serialize_colored_family(const std::vector<ColoredGraph>& family);

Graph parse_graph(const std::string& text);
OrderedGraph parse_ordered_graph(const std::string& text);
ColoredGraph parse_colored_graph(const std::string& text);
RelStructure parse_structure(const std::string& text);
TemporalStructure parse_temporal(const std::string& text);
Hypergraph3 parse_hypergraph(const std::string& text);
WeakOrderWitness parse_witness(const std::string& text);
ColoredStructure parse_colored_structure(const std::string& text);
SilInstance parse_sil_instance(const std::string& text);
std::vector<OrderedGraph> parse_ordered_family(const std::string& text);
std::vector<ColoredGraph> parse_colored_family(const std::string& text);

}  // namespace ordpat
