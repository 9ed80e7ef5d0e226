#include "syncset/automaton_io.hpp"

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace syncset {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::uint32_t parse_positive_count(const json& doc, const char* key) {
  if (!doc.contains(key)) throw ParseError(std::string("missing \"") + key + "\" field");
  const json& value = doc.at(key);
  if (!value.is_number_integer() || value.get<std::int64_t>() < 1 ||
      value.get<std::int64_t>() > 0xffffffffLL) {
    throw ParseError(std::string("\"") + key + "\" must be a positive integer");
  }
  return value.get<std::uint32_t>();
}

std::string quote_for_dot(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

Automaton automaton_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("automaton document must be a JSON object");
  const std::uint32_t states = parse_positive_count(doc, "states");
  const std::uint32_t alphabet = parse_positive_count(doc, "alphabet");

  if (!doc.contains("delta")) throw ParseError("missing \"delta\" field");
  const json& rows = doc.at("delta");
  if (!rows.is_array() || rows.size() != states) {
    throw ParseError("\"delta\" must be an array of " + std::to_string(states) + " rows");
  }
  std::vector<State> delta;
  delta.reserve(std::size_t{states} * alphabet);
  for (std::uint32_t s = 0; s < states; ++s) {
    const json& row = rows.at(s);
    if (!row.is_array() || row.size() != alphabet) {
      throw ParseError("delta[" + std::to_string(s) + "] must be an array of " +
                       std::to_string(alphabet) + " targets");
    }
    for (std::uint32_t a = 0; a < alphabet; ++a) {
      const json& cell = row.at(a);
      if (!cell.is_number_integer() || cell.get<std::int64_t>() < 0 ||
          cell.get<std::int64_t>() >= static_cast<std::int64_t>(states)) {
        throw ParseError("delta[" + std::to_string(s) + "][" + std::to_string(a) +
                         "]: target out of range [0, " + std::to_string(states) + ")");
      }
      delta.push_back(cell.get<State>());
    }
  }

  std::optional<std::vector<std::string>> labels;
  if (doc.contains("labels")) {
    const json& raw = doc.at("labels");
    if (!raw.is_array() || raw.size() != states) {
      throw ParseError("\"labels\" must be an array of " + std::to_string(states) + " strings");
    }
    std::vector<std::string> list;
    list.reserve(states);
    for (std::uint32_t s = 0; s < states; ++s) {
      if (!raw.at(s).is_string()) {
        throw ParseError("labels[" + std::to_string(s) + "] must be a string");
      }
      list.push_back(raw.at(s).get<std::string>());
    }
    labels = std::move(list);
  }

  return Automaton(states, alphabet, std::move(delta), std::move(labels));
}

Automaton parse_automaton(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return automaton_from_json(doc);
}

ordered_json automaton_to_json(const Automaton& a) {
  ordered_json doc;
  doc["states"] = a.state_count();
  doc["alphabet"] = a.alphabet_size();
  ordered_json rows = ordered_json::array();
  for (State s = 0; s < a.state_count(); ++s) {
    ordered_json row = ordered_json::array();
    for (Letter x = 0; x < a.alphabet_size(); ++x) row.push_back(a.next(s, x));
    rows.push_back(std::move(row));
  }
  doc["delta"] = std::move(rows);
  if (a.labels()) doc["labels"] = *a.labels();
  return doc;
}

std::string serialize_automaton(const Automaton& a) {
  return automaton_to_json(a).dump() + "\n";
}

std::string export_dot(const Automaton& a, const DotOptions& options) {
  std::ostringstream out;
  out << "digraph automaton {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=circle];\n";
  for (State s = 0; s < a.state_count(); ++s) {
    std::string label = a.labels() ? (*a.labels())[s] : std::to_string(s);
    if (label.empty()) label = std::to_string(s);
    out << "  q" << s << " [label=\"" << quote_for_dot(label) << "\"];\n";
  }
  for (State s = 0; s < a.state_count(); ++s) {
    std::map<State, std::string> grouped;  // target -> joined letter list
    for (Letter x = 0; x < a.alphabet_size(); ++x) {
      const State target = a.next(s, x);
      if (!options.include_self_loops && target == s) continue;
      std::string& letters = grouped[target];
      if (!letters.empty()) letters += ",";
      letters += std::to_string(x);
    }
    for (const auto& [target, letters] : grouped) {
      out << "  q" << s << " -> q" << target << " [label=\"" << letters << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace syncset
