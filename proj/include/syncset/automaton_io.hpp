#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "syncset/automaton.hpp"

namespace syncset {

/// Wire format:
///   {"states": n, "alphabet": k, "delta": [[...k ints...] x n], "labels": [...]}
/// `labels` is optional and, when present, holds one string per state.
Automaton parse_automaton(std::string_view text);
Automaton automaton_from_json(const nlohmann::json& doc);

nlohmann::ordered_json automaton_to_json(const Automaton& a);

/// Compact single-line JSON plus a trailing newline. The output is
/// byte-deterministic, so parse(serialize(A)) == A and equal automata
/// serialize identically.
std::string serialize_automaton(const Automaton& a);

struct DotOptions {
  /// When false, self-loop edges are left out of the rendering. Nodes are
  /// always emitted, so an all-self-loop state still appears (as a node with
  /// no edges).
  bool include_self_loops = true;
};

/// GraphViz rendering. Parallel transitions between the same pair of states
/// collapse into one edge labelled with the comma-joined letter indices.
std::string export_dot(const Automaton& a, const DotOptions& options = {});

}  // namespace syncset
