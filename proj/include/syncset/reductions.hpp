#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "syncset/automaton.hpp"
#include "syncset/graph.hpp"
#include "syncset/state_set.hpp"

namespace syncset {

enum class GadgetKind {
  padding,                 // "thm1": threshold padding of an (A, S) instance
  weakly_acyclic,          // "thm2": p-letter gadget, one (s, t) pair per vertex
  binary_pre_replication,  // "lemma2": layered binary gadget, first layer unreplicated
  binary_full,             // "thm3": layered binary gadget + cycle, first layer x p
  binary_weakly_acyclic,   // "thm4": layered binary gadget, no cycle, first layer x p^2
};

std::string to_string(GadgetKind kind);

/// What the construction predicts about the emitted automaton. `exact` and
/// `bounds` speak about the maximum synchronizing set size (for the
/// pre-replication gadget, restricted to the first layer); `threshold` is
/// the padding construction's decision bound c. When the underlying claim
/// needs alpha(G) >= 2 and the graph does not provide it, the prediction is
/// kept but flagged unreliable.
struct Expected {
  enum class Kind { exact, bounds, threshold };
  Kind kind = Kind::exact;
  std::size_t exact = 0;
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::size_t threshold = 0;
  bool reliable = true;
  std::string note;
};

struct GadgetParams {
  GadgetKind kind = GadgetKind::padding;
  std::uint32_t p = 0;       // vertex count (graph gadgets)
  std::size_t alpha = 0;     // alpha(G) (graph gadgets)
  std::uint32_t copies = 0;  // first-layer replication factor (layered gadgets)
  std::optional<Graph> graph;
  std::optional<Automaton> source_automaton;  // padding only
  std::vector<State> source_set;              // padding only
  /// Designated entry states: the prune pass keeps exactly the states
  /// reachable from these.
  std::vector<State> entry_states;
  bool pruned = false;
};

struct GadgetArtifact {
  Automaton automaton;
  /// Construction role of every state, also installed as automaton labels.
  std::vector<std::string> roles;
  Expected expected;
  GadgetParams params;
};

/// Padding construction: appends, for every member s of `set` in ascending
/// order, n+1 fresh states whose every transition goes to s. The original
/// set is synchronizing in `a` iff the result has a synchronizing set of
/// size at least c = (n+1)*|set|. The set must be nonempty.
GadgetArtifact padding_construction(const Automaton& a, const StateSet& set);

/// Weakly acyclic gadget over p letters: states s_1..s_p, t_1..t_p, f with
/// s_i -> f on letter i, s_i -> t_i on the letter of every neighbour of v_i,
/// self-loops elsewhere. Maximum synchronizing set size is alpha(G) + 1.
GadgetArtifact gadget_weakly_acyclic(const Graph& g);

/// Layered binary gadget before first-layer replication (2p^2 + p states,
/// p >= 2): the largest synchronizing subset of the first layer has size
/// exactly alpha(G).
GadgetArtifact gadget_binary_pre_replication(const Graph& g);

/// Layered binary gadget with the first layer replicated p times and a
/// p-cycle attached to f (4p^2 - p states, p >= 2). For alpha(G) >= 2 the
/// maximum synchronizing set size is p * alpha(G) + 1; otherwise the
/// prediction is flagged unreliable.
GadgetArtifact gadget_binary(const Graph& g);

/// Weakly acyclic variant: no cycle, f absorbing, first layer replicated p^2
/// times (2p^3 + 2p(p-1) + 1 states, p >= 2). The maximum synchronizing set
/// size lies in [p^2 * alpha(G), p^2 * alpha(G) + p(p-1) + 1].
GadgetArtifact gadget_binary_weakly_acyclic(const Graph& g);

/// Restriction to the states reachable from the artifact's entry states,
/// renumbered compactly in the original order. Predictions carry over: the
/// removed states can only ever synchronize as singletons.
GadgetArtifact prune_unreachable(const GadgetArtifact& artifact);

/// Artifact wire format: {"automaton": {...}, "roles": [...],
/// "expected": {...}, "params": {...}}.
std::string serialize_artifact(const GadgetArtifact& artifact);

}  // namespace syncset
