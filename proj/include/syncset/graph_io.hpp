#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "syncset/graph.hpp"

namespace syncset {

/// JSON wire format: {"vertices": p, "edges": [[i, j], ...]} with 0-indexed
/// endpoints.
Graph parse_graph_json(std::string_view text);
Graph graph_from_json(const nlohmann::json& doc);
nlohmann::ordered_json graph_to_json(const Graph& g);
std::string serialize_graph_json(const Graph& g);

/// DIMACS format: optional "c ..." comment lines, one "p edge <p> <m>"
/// header, then m lines "e <i> <j>" with 1-indexed endpoints. Parse errors
/// report the offending line number.
Graph parse_graph_dimacs(std::string_view text);
std::string serialize_graph_dimacs(const Graph& g);

/// Accepts either format, sniffing JSON by a leading '{'.
Graph parse_graph(std::string_view text);

}  // namespace syncset
