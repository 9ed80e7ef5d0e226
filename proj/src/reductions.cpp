#include "syncset/reductions.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "syncset/automaton_io.hpp"
#include "syncset/graph_io.hpp"

namespace syncset {

namespace {

using nlohmann::ordered_json;

void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

std::string subscript_pair(std::uint32_t i, std::uint32_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

/// Shared core of the three layered binary gadgets. Layer index i and vertex
/// index j run over 1..p in the construction; state numbering goes in
/// contiguous blocks:
///   - v-states of the non-replicated layers, layer-major
///   - u-states of the same layers
///   - f
///   - cycle states c_2..c_p (only when the cycle is attached; c_1 is f)
///   - first-layer copies, copy-major: v(1,1)#c..v(1,p)#c, u(1,1)#c..u(1,p)#c
/// With replication == 1 the first layer is not replicated at all and joins
/// the front blocks.
GadgetArtifact build_layered(const Graph& g, std::uint32_t replication, bool attach_cycle,
                             GadgetKind kind) {
  const std::uint32_t p = g.vertex_count();
  require(p >= 2, to_string(kind) + " gadget requires at least 2 vertices, got " +
                      std::to_string(p));
  const std::size_t alpha = max_independent_set(g).size;

  const bool replicated = replication > 1;
  const std::uint32_t front_layers = replicated ? p - 1 : p;  // layers 2..p or 1..p
  const std::uint32_t first_front_layer = replicated ? 2 : 1;
  const State f = 2 * front_layers * p;
  const std::uint32_t cycle_states = attach_cycle ? p - 1 : 0;
  const State copy_base = f + 1 + cycle_states;
  const std::uint32_t copy_block = replicated ? 2 * p : 0;
  const std::uint32_t state_count = copy_base + replication * copy_block;

  const auto v_index = [&](std::uint32_t i, std::uint32_t j) -> State {
    return (i - first_front_layer) * p + (j - 1);
  };
  const auto u_index = [&](std::uint32_t i, std::uint32_t j) -> State {
    return front_layers * p + (i - first_front_layer) * p + (j - 1);
  };
  const auto v_copy_index = [&](std::uint32_t c, std::uint32_t j) -> State {
    return copy_base + (c - 1) * copy_block + (j - 1);
  };
  const auto u_copy_index = [&](std::uint32_t c, std::uint32_t j) -> State {
    return copy_base + (c - 1) * copy_block + p + (j - 1);
  };

  Automaton::Builder builder(state_count, 2);

  // Letter semantics in layer i: letter 0 sends v(i,j) aside to u(i,j)
  // exactly when i == j, letter 1 exactly when v_i v_j is an edge; otherwise
  // the state advances to layer i+1 (layer p+1 being f).
  const auto advance_target = [&](std::uint32_t i, std::uint32_t j) -> State {
    return i == p ? f : v_index(i + 1, j);
  };
  const auto sidetrack = [&](std::uint32_t i, std::uint32_t j, Letter x) -> bool {
    return x == 0 ? i == j : g.adjacent(i - 1, j - 1);
  };

  for (std::uint32_t i = first_front_layer; i <= p; ++i) {
    for (std::uint32_t j = 1; j <= p; ++j) {
      builder.label(v_index(i, j), "v" + subscript_pair(i, j));
      builder.label(u_index(i, j), "u" + subscript_pair(i, j));
      for (Letter x = 0; x < 2; ++x) {
        builder.set(v_index(i, j), x, sidetrack(i, j, x) ? u_index(i, j) : advance_target(i, j));
      }
      // u-states keep their self-loops (builder default).
    }
  }

  builder.label(f, "f");
  if (attach_cycle) {
    // f is c_1; both letters advance along the cycle.
    for (std::uint32_t m = 1; m <= p; ++m) {
      const State here = m == 1 ? f : f + (m - 1);
      const State next = m == p ? f : f + m;
      if (m > 1) builder.label(here, "c(" + std::to_string(m) + ")");
      builder.set(here, 0, next);
      builder.set(here, 1, next);
    }
  }
  // Without the cycle f keeps its self-loops and is absorbing.

  std::vector<State> entries;
  if (replicated) {
    for (std::uint32_t c = 1; c <= replication; ++c) {
      for (std::uint32_t j = 1; j <= p; ++j) {
        const State v = v_copy_index(c, j);
        const State u = u_copy_index(c, j);
        builder.label(v, "v" + subscript_pair(1, j) + "#" + std::to_string(c));
        builder.label(u, "u" + subscript_pair(1, j) + "#" + std::to_string(c));
        for (Letter x = 0; x < 2; ++x) {
          builder.set(v, x, sidetrack(1, j, x) ? u : advance_target(1, j));
        }
        entries.push_back(v);
      }
    }
  } else {
    for (std::uint32_t j = 1; j <= p; ++j) entries.push_back(v_index(1, j));
  }

  GadgetArtifact artifact{builder.build(), {}, {}, {}};
  artifact.roles = *artifact.automaton.labels();

  switch (kind) {
    case GadgetKind::binary_pre_replication:
      artifact.expected.kind = Expected::Kind::exact;
      artifact.expected.exact = alpha;
      artifact.expected.note = "largest synchronizing subset of the first layer";
      break;
    case GadgetKind::binary_full:
      artifact.expected.kind = Expected::Kind::exact;
      artifact.expected.exact = std::size_t{p} * alpha + 1;
      if (alpha < 2) {
        artifact.expected.reliable = false;
        artifact.expected.note =
            "prediction requires alpha(G) >= 2, got " + std::to_string(alpha);
      }
      break;
    case GadgetKind::binary_weakly_acyclic:
      artifact.expected.kind = Expected::Kind::bounds;
      artifact.expected.lower = std::size_t{p} * p * alpha;
      artifact.expected.upper = std::size_t{p} * p * alpha + std::size_t{p} * (p - 1) + 1;
      break;
    default:
      throw std::logic_error("build_layered called with a non-layered kind");
  }

  artifact.params.kind = kind;
  artifact.params.p = p;
  artifact.params.alpha = alpha;
  artifact.params.copies = replication;
  artifact.params.graph = g;
  artifact.params.entry_states = std::move(entries);
  return artifact;
}

ordered_json expected_to_json(const Expected& expected) {
  ordered_json doc;
  switch (expected.kind) {
    case Expected::Kind::exact:
      doc["exact"] = expected.exact;
      break;
    case Expected::Kind::bounds:
      doc["lower"] = expected.lower;
      doc["upper"] = expected.upper;
      break;
    case Expected::Kind::threshold:
      doc["threshold"] = expected.threshold;
      break;
  }
  if (!expected.reliable) doc["reliable"] = false;
  if (!expected.note.empty()) doc["note"] = expected.note;
  return doc;
}

ordered_json params_to_json(const GadgetParams& params) {
  ordered_json doc;
  doc["kind"] = to_string(params.kind);
  if (params.graph) {
    doc["p"] = params.p;
    doc["alpha"] = params.alpha;
    if (params.copies > 0) doc["copies"] = params.copies;
    doc["graph"] = graph_to_json(*params.graph);
  }
  if (params.source_automaton) {
    doc["source"] = automaton_to_json(*params.source_automaton);
    doc["set"] = params.source_set;
  }
  doc["entry_states"] = params.entry_states;
  doc["pruned"] = params.pruned;
  return doc;
}

}  // namespace

std::string to_string(GadgetKind kind) {
  switch (kind) {
    case GadgetKind::padding:
      return "thm1";
    case GadgetKind::weakly_acyclic:
      return "thm2";
    case GadgetKind::binary_pre_replication:
      return "lemma2";
    case GadgetKind::binary_full:
      return "thm3";
    case GadgetKind::binary_weakly_acyclic:
      return "thm4";
  }
  return "unknown";
}

GadgetArtifact padding_construction(const Automaton& a, const StateSet& set) {
  require(set.universe() == a.state_count(), "set universe does not match the automaton");
  require(!set.empty(), "padding requires a nonempty state set");

  const std::uint32_t n = a.state_count();
  const std::uint32_t k = a.alphabet_size();
  const std::size_t pads_per_member = std::size_t{n} + 1;
  const std::size_t threshold = pads_per_member * set.size();
  const auto total = static_cast<std::uint32_t>(n + threshold);

  std::vector<State> delta(std::size_t{total} * k);
  std::vector<std::string> roles(total);
  for (State q = 0; q < n; ++q) {
    for (Letter x = 0; x < k; ++x) delta[std::size_t{q} * k + x] = a.next(q, x);
    roles[q] = "orig(" + std::to_string(q) + ")";
  }

  std::vector<State> entries;
  State cursor = n;
  set.for_each([&](State member) {
    for (std::size_t t = 0; t < pads_per_member; ++t) {
      for (Letter x = 0; x < k; ++x) delta[std::size_t{cursor} * k + x] = member;
      roles[cursor] = "pad(" + std::to_string(member) + ")#" + std::to_string(t);
      entries.push_back(cursor);
      ++cursor;
    }
  });

  GadgetArtifact artifact{Automaton(total, k, std::move(delta), roles), {}, {}, {}};
  artifact.roles = std::move(roles);
  artifact.expected.kind = Expected::Kind::threshold;
  artifact.expected.threshold = threshold;
  artifact.expected.note = "set is synchronizing iff a synchronizing set of this size exists";
  artifact.params.kind = GadgetKind::padding;
  artifact.params.source_automaton = a;
  artifact.params.source_set = set.members();
  artifact.params.entry_states = std::move(entries);
  return artifact;
}

GadgetArtifact gadget_weakly_acyclic(const Graph& g) {
  const std::uint32_t p = g.vertex_count();
  const std::size_t alpha = max_independent_set(g).size;

  // States: s_i at i-1, t_i at p+i-1, f at 2p; one letter per vertex.
  const State f = 2 * p;
  Automaton::Builder builder(2 * p + 1, p);
  for (std::uint32_t i = 0; i < p; ++i) {
    builder.label(i, "s" + std::to_string(i + 1));
    builder.label(p + i, "t" + std::to_string(i + 1));
    builder.set(i, i, f);  // s_i moves to f on its own letter
  }
  builder.label(f, "f");
  for (const auto& [x, y] : g.edges()) {
    // On a neighbour's letter, s gets stuck on its t-state.
    builder.set(x, y, p + x);
    builder.set(y, x, p + y);
  }

  GadgetArtifact artifact{builder.build(), {}, {}, {}};
  artifact.roles = *artifact.automaton.labels();
  artifact.expected.kind = Expected::Kind::exact;
  artifact.expected.exact = alpha + 1;
  artifact.params.kind = GadgetKind::weakly_acyclic;
  artifact.params.p = p;
  artifact.params.alpha = alpha;
  artifact.params.graph = g;
  artifact.params.entry_states.resize(p);
  for (std::uint32_t i = 0; i < p; ++i) artifact.params.entry_states[i] = i;
  return artifact;
}

GadgetArtifact gadget_binary_pre_replication(const Graph& g) {
  return build_layered(g, 1, true, GadgetKind::binary_pre_replication);
}

GadgetArtifact gadget_binary(const Graph& g) {
  return build_layered(g, g.vertex_count(), true, GadgetKind::binary_full);
}

GadgetArtifact gadget_binary_weakly_acyclic(const Graph& g) {
  return build_layered(g, g.vertex_count() * g.vertex_count(), false,
                       GadgetKind::binary_weakly_acyclic);
}

GadgetArtifact prune_unreachable(const GadgetArtifact& artifact) {
  const Automaton& a = artifact.automaton;
  const std::uint32_t n = a.state_count();
  const std::uint32_t k = a.alphabet_size();

  std::vector<char> reachable(n, 0);
  std::vector<State> queue;
  for (State entry : artifact.params.entry_states) {
    if (!reachable[entry]) {
      reachable[entry] = 1;
      queue.push_back(entry);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Letter x = 0; x < k; ++x) {
      const State target = a.next(queue[head], x);
      if (!reachable[target]) {
        reachable[target] = 1;
        queue.push_back(target);
      }
    }
  }

  std::vector<State> remap(n, 0);
  std::uint32_t kept = 0;
  for (State q = 0; q < n; ++q) {
    if (reachable[q]) remap[q] = kept++;
  }
  require(kept >= 1, "prune would remove every state");

  std::vector<State> delta(std::size_t{kept} * k);
  std::vector<std::string> roles(kept);
  for (State q = 0; q < n; ++q) {
    if (!reachable[q]) continue;
    roles[remap[q]] = artifact.roles[q];
    for (Letter x = 0; x < k; ++x) {
      delta[std::size_t{remap[q]} * k + x] = remap[a.next(q, x)];
    }
  }

  GadgetArtifact pruned{Automaton(kept, k, std::move(delta), roles), {}, artifact.expected,
                        artifact.params};
  pruned.roles = std::move(roles);
  pruned.params.pruned = true;
  pruned.params.entry_states.clear();
  for (State entry : artifact.params.entry_states) {
    pruned.params.entry_states.push_back(remap[entry]);
  }
  return pruned;
}

std::string serialize_artifact(const GadgetArtifact& artifact) {
  ordered_json doc;
  doc["automaton"] = automaton_to_json(artifact.automaton);
  doc["roles"] = artifact.roles;
  doc["expected"] = expected_to_json(artifact.expected);
  doc["params"] = params_to_json(artifact.params);
  return doc.dump() + "\n";
}

}  // namespace syncset
