#pragma once

#include <cstdint>
#include <optional>

#include "syncset/automaton.hpp"
#include "syncset/state_set.hpp"
#include "syncset/types.hpp"

namespace syncset {

/// Certificate that `set` is synchronizing: replaying `word` on `set` must
/// land on exactly {target}. Witness sets are always nonempty.
struct SyncWitness {
  StateSet set;
  Word word;
  State target = 0;
};

/// Node cap for the subset searches. Both the forward decision search and
/// the backward maximisation search count every distinct subset they visit
/// against this budget and stop with an explicit "budget exhausted" outcome
/// when it runs out, rather than degrading silently.
inline constexpr std::uint64_t kDefaultNodeBudget = std::uint64_t{1} << 22;

struct SolverOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;
  /// Experimental: during the backward search, discard a new subset that is
  /// properly contained in an already-visited one. Sound for the maximum
  /// (preimages are monotone under inclusion) and off by default.
  bool antichain_pruning = false;
};

/// Outcome of the synchronizing-set decision for one subset.
struct DecideResult {
  enum class Outcome { synchronizing, not_synchronizing, budget_exhausted };
  Outcome outcome = Outcome::not_synchronizing;
  /// Present iff outcome == synchronizing; the word is a shortest
  /// synchronizing word for the input set and lexicographically smallest
  /// among the shortest ones.
  std::optional<SyncWitness> witness;
  std::uint64_t explored = 0;  // distinct subsets visited
};

/// Breadth-first search over images of `s`, deduplicating subsets. The input
/// set must be nonempty.
DecideResult decide_sync_set(const Automaton& a, const StateSet& s, SolverOptions options = {});

struct MaxSyncResult {
  SyncWitness best;
  std::size_t size = 0;        // == best.set.size()
  std::uint64_t explored = 0;  // lattice nodes visited (diagnostics)
};

struct MaxSyncOutcome {
  enum class Status { complete, budget_exhausted };
  Status status = Status::complete;
  /// On budget exhaustion this still carries the best synchronizing set
  /// found so far, i.e. a valid lower bound with a replayable witness.
  MaxSyncResult result;
};

/// Exact maximum synchronizing set via backward search over full preimages
/// of singletons: every maximal synchronizing set arises as the full
/// preimage of some singleton under some word, so returning the largest
/// visited subset is exact once the search closes. Ties between
/// equal-cardinality maxima go to the lexicographically smallest subset;
/// its witness word is a shortest synchronizing word for that subset,
/// lexicographically smallest among the shortest.
MaxSyncOutcome max_sync_set_exact(const Automaton& a, SolverOptions options = {});

/// Reference oracle: enumerates all subsets in decreasing cardinality
/// (lexicographic within a cardinality) and returns the first one
/// decide_sync_set accepts. Exact by exhaustion; n <= 12 enforced.
MaxSyncResult max_sync_set_naive(const Automaton& a);

/// Polynomial special case for unary automata: after n applications of the
/// single letter every state has entered its cycle, so the maximum
/// synchronizing sets are exactly the largest fibres of that power map. The
/// witness word has length exactly n.
MaxSyncResult max_sync_set_unary(const Automaton& a);

/// Decision form: is there a synchronizing set of size >= bound? Runs the
/// backward search with an early exit on the first subset of sufficient
/// cardinality.
struct DecisionResult {
  enum class Outcome { yes, no, indeterminate };  // indeterminate = budget exhausted
  Outcome outcome = Outcome::no;
  std::uint64_t explored = 0;
};
DecisionResult max_sync_set_decision(const Automaton& a, std::size_t bound,
                                     SolverOptions options = {});

/// Largest synchronizing subset contained in `restriction`, by decreasing-
/// cardinality enumeration of its subsets; |restriction| <= 20 enforced.
/// Used to check the first-layer claims of the layered gadgets.
MaxSyncResult max_sync_subset_within(const Automaton& a, const StateSet& restriction,
                                     SolverOptions options = {});

/// True iff the whole state set is synchronizing. Polynomial: every
/// unordered pair of states must reach the diagonal of the pair automaton
/// (checked by one backward reachability pass); unary automata use the
/// power-map shortcut instead. Memory is O(n^2) for non-unary input.
bool is_synchronizing(const Automaton& a);

/// Some synchronizing word for the whole state set, or nullopt when none
/// exists. Greedy pair merging: repeatedly merge the two lowest-indexed
/// states of the current image with a shortest merging word, giving an
/// O(n^3)-length word overall.
std::optional<Word> find_sync_word(const Automaton& a);

}  // namespace syncset
