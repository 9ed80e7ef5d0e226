#include "syncset/graph_io.hpp"

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "syncset/types.hpp"

namespace syncset {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::uint32_t endpoint_from_json(const json& cell, std::size_t index, std::size_t slot,
                                 std::uint32_t vertices) {
  if (!cell.is_number_integer() || cell.get<std::int64_t>() < 0 ||
      cell.get<std::int64_t>() >= static_cast<std::int64_t>(vertices)) {
    throw ParseError("edges[" + std::to_string(index) + "][" + std::to_string(slot) +
                     "]: endpoint out of range [0, " + std::to_string(vertices) + ")");
  }
  return cell.get<std::uint32_t>();
}

}  // namespace

Graph graph_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("graph document must be a JSON object");
  if (!doc.contains("vertices")) throw ParseError("missing \"vertices\" field");
  const json& raw_vertices = doc.at("vertices");
  if (!raw_vertices.is_number_integer() || raw_vertices.get<std::int64_t>() < 1 ||
      raw_vertices.get<std::int64_t>() > 0xffffffffLL) {
    throw ParseError("\"vertices\" must be a positive integer");
  }
  const auto vertices = raw_vertices.get<std::uint32_t>();

  std::vector<Graph::Edge> edges;
  if (doc.contains("edges")) {
    const json& raw_edges = doc.at("edges");
    if (!raw_edges.is_array()) throw ParseError("\"edges\" must be an array");
    edges.reserve(raw_edges.size());
    for (std::size_t i = 0; i < raw_edges.size(); ++i) {
      const json& pair = raw_edges.at(i);
      if (!pair.is_array() || pair.size() != 2) {
        throw ParseError("edges[" + std::to_string(i) + "] must be a pair [i, j]");
      }
      const std::uint32_t u = endpoint_from_json(pair.at(0), i, 0, vertices);
      const std::uint32_t v = endpoint_from_json(pair.at(1), i, 1, vertices);
      edges.emplace_back(u, v);
    }
  }
  try {
    return Graph(vertices, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Graph parse_graph_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return graph_from_json(doc);
}

ordered_json graph_to_json(const Graph& g) {
  ordered_json doc;
  doc["vertices"] = g.vertex_count();
  ordered_json edges = ordered_json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back(ordered_json::array({u, v}));
  doc["edges"] = std::move(edges);
  return doc;
}

std::string serialize_graph_json(const Graph& g) { return graph_to_json(g).dump() + "\n"; }

Graph parse_graph_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_number = 0;

  bool saw_header = false;
  std::uint32_t vertices = 0;
  std::size_t declared_edges = 0;
  std::vector<Graph::Edge> edges;

  while (std::getline(in, line)) {
    ++line_number;
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag)) continue;  // blank line
    const std::string where = "line " + std::to_string(line_number) + ": ";

    if (tag == "c") continue;

    if (tag == "p") {
      if (saw_header) throw ParseError(where + "duplicate problem line");
      std::string kind;
      long long p = 0;
      long long m = 0;
      std::string extra;
      if (!(fields >> kind >> p >> m) || kind != "edge" || (fields >> extra)) {
        throw ParseError(where + "expected \"p edge <vertices> <edges>\"");
      }
      if (p < 1 || p > 0xffffffffLL || m < 0) {
        throw ParseError(where + "vertex/edge counts out of range");
      }
      vertices = static_cast<std::uint32_t>(p);
      declared_edges = static_cast<std::size_t>(m);
      saw_header = true;
      continue;
    }

    if (tag == "e") {
      if (!saw_header) throw ParseError(where + "edge before the problem line");
      long long u = 0;
      long long v = 0;
      std::string extra;
      if (!(fields >> u >> v) || (fields >> extra)) {
        throw ParseError(where + "expected \"e <i> <j>\"");
      }
      if (u < 1 || v < 1 || u > vertices || v > vertices) {
        throw ParseError(where + "endpoint out of range [1, " + std::to_string(vertices) + "]");
      }
      if (u == v) throw ParseError(where + "self-loop not allowed");
      edges.emplace_back(static_cast<std::uint32_t>(u - 1), static_cast<std::uint32_t>(v - 1));
      continue;
    }

    throw ParseError(where + "unknown line tag \"" + tag + "\"");
  }

  if (!saw_header) throw ParseError("missing \"p edge\" problem line");
  if (edges.size() != declared_edges) {
    throw ParseError("problem line declares " + std::to_string(declared_edges) +
                     " edges but the file lists " + std::to_string(edges.size()));
  }
  try {
    return Graph(vertices, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string serialize_graph_dimacs(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (const auto& [u, v] : g.edges()) out << "e " << (u + 1) << " " << (v + 1) << "\n";
  return out.str();
}

Graph parse_graph(std::string_view text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    if (c == '{') return parse_graph_json(text);
    return parse_graph_dimacs(text);
  }
  throw ParseError("empty graph document");
}

}  // namespace syncset
