#pragma once

// Shared worked examples. The central one is the three-vertex graph with the
// single edge v2-v3 and the 21-state layered automaton built from it. Its
// transition table is frozen below, derived by hand from the construction
// rule, so the builder is tested against an independent source rather than
// against itself.

#include <vector>

#include "syncset/automaton.hpp"
#include "syncset/graph.hpp"

namespace fixtures {

/// Three vertices, one edge v2-v3 (0-indexed {1,2}). alpha = 2.
inline syncset::Graph example_graph() { return syncset::Graph(3, {{1, 2}}); }

/// Frozen table of the unreplicated layered automaton over example_graph().
/// Numbering: v(i,j) = 3(i-1)+(j-1) for layers i = 1..3 and vertices
/// j = 1..3, u(i,j) = 9 + 3(i-1)+(j-1), f = 18, c2 = 19, c3 = 20.
/// Letter 0 sidetracks v(i,j) to u(i,j) exactly when i == j, letter 1
/// exactly when vi-vj is an edge; otherwise the state advances one layer
/// (past layer 3 means f). u-states self-loop; f -> c2 -> c3 -> f.
inline const std::vector<syncset::State>& example_a1_delta() {
  static const std::vector<syncset::State> delta = {
      9,  3,   // v(1,1): 0 sidetracks (i == j), 1 advances (no edge v1v1)
      4,  4,   // v(1,2): both advance (no edge v1v2)
      5,  5,   // v(1,3): both advance (no edge v1v3)
      6,  6,   // v(2,1): both advance
      13, 7,   // v(2,2): 0 sidetracks (i == j)
      8,  14,  // v(2,3): 1 sidetracks (edge v2v3)
      18, 18,  // v(3,1): both advance to f
      18, 16,  // v(3,2): 1 sidetracks (edge v3v2)
      17, 18,  // v(3,3): 0 sidetracks (i == j)
      9,  9,  10, 10, 11, 11, 12, 12, 13, 13, 14, 14, 15, 15, 16, 16, 17, 17,  // u self-loops
      19, 19,  // f = c1
      20, 20,  // c2
      18, 18,  // c3
  };
  return delta;
}

inline syncset::Automaton example_a1() { return syncset::Automaton(21, 2, example_a1_delta()); }

/// Four-state automaton with a rotation letter and a letter that moves only
/// state 0; the classic synchronizing example.
inline syncset::Automaton cerny4() { return syncset::Automaton(4, 2, {1, 1, 2, 1, 3, 2, 0, 3}); }

/// Unary 3-cycle: a permutation, so no set of size > 1 ever synchronizes.
inline syncset::Automaton cycle3() { return syncset::Automaton(3, 1, {1, 2, 0}); }

/// Two states, one letter, both mapping to state 1.
inline syncset::Automaton funnel2() { return syncset::Automaton(2, 1, {1, 1}); }

/// Five states on one letter: a 2-cycle {0,1} with tails 2->0, 3->0, 4->1.
inline syncset::Automaton two_cycle_with_tails() {
  return syncset::Automaton(5, 1, {1, 0, 0, 0, 1});
}

/// Star: every state maps to 0 on the only letter.
inline syncset::Automaton star5() { return syncset::Automaton(5, 1, {0, 0, 0, 0, 0}); }

}  // namespace fixtures
