#include "syncset/solvers.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace syncset {

namespace {

constexpr std::uint32_t kNoParent = std::numeric_limits<std::uint32_t>::max();

void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

/// CSR table of letter preimages: for a letter x and state t, the ascending
/// list of states q with delta(q, x) == t.
struct InverseTable {
  std::uint32_t states = 0;
  std::vector<std::uint32_t> offsets;  // indexed by x * n + t, size n*k + 1
  std::vector<State> entries;

  static InverseTable build(const Automaton& a) {
    const std::uint32_t n = a.state_count();
    const std::uint32_t k = a.alphabet_size();
    InverseTable table;
    table.states = n;
    table.offsets.assign(std::size_t{n} * k + 1, 0);
    for (State q = 0; q < n; ++q) {
      for (Letter x = 0; x < k; ++x) {
        ++table.offsets[std::size_t{x} * n + a.next(q, x) + 1];
      }
    }
    for (std::size_t i = 1; i < table.offsets.size(); ++i) {
      table.offsets[i] += table.offsets[i - 1];
    }
    table.entries.resize(std::size_t{n} * k);
    std::vector<std::uint32_t> cursor(table.offsets.begin(), table.offsets.end() - 1);
    for (State q = 0; q < n; ++q) {
      for (Letter x = 0; x < k; ++x) {
        table.entries[cursor[std::size_t{x} * n + a.next(q, x)]++] = q;
      }
    }
    return table;
  }

  template <typename F>
  void for_each_preimage(Letter x, State t, F&& fn) const {
    const std::size_t slot = std::size_t{x} * states + t;
    for (std::uint32_t i = offsets[slot]; i < offsets[slot + 1]; ++i) fn(entries[i]);
  }
};

StateSet letter_preimage(const InverseTable& inv, const StateSet& target, Letter x) {
  StateSet out(target.universe());
  target.for_each([&](State t) { inv.for_each_preimage(x, t, [&](State q) { out.insert(q); }); });
  return out;
}

/// Deduplicated subset store shared by the searches. Keys live in the
/// unordered_map, which keeps them pointer-stable, so nodes only carry a
/// pointer plus predecessor metadata.
struct SubsetNode {
  const StateSet* set = nullptr;
  std::uint32_t parent = kNoParent;
  Letter letter = 0;
  State target = 0;  // backward search only: the root singleton's state
};

struct SubsetStore {
  std::vector<SubsetNode> nodes;
  std::unordered_map<StateSet, std::uint32_t, StateSetHash> index;

  /// Returns the node id, or kNoParent when the subset was already present.
  std::uint32_t insert(StateSet set, std::uint32_t parent, Letter letter, State target) {
    auto [it, fresh] = index.emplace(std::move(set), static_cast<std::uint32_t>(nodes.size()));
    if (!fresh) return kNoParent;
    nodes.push_back({&it->first, parent, letter, target});
    return it->second;
  }
};

/// Word read off the forward-search predecessor chain: letters are collected
/// leaf-to-root and reversed, since each node extends its parent's word.
Word forward_chain_word(const std::vector<SubsetNode>& nodes, std::uint32_t id) {
  Word word;
  while (nodes[id].parent != kNoParent) {
    word.push_back(nodes[id].letter);
    id = nodes[id].parent;
  }
  std::reverse(word.begin(), word.end());
  return word;
}

/// Word read off the backward-search chain: each node is a letter-preimage
/// of its parent, so the letters already come out in application order.
Word backward_chain_word(const std::vector<SubsetNode>& nodes, std::uint32_t id) {
  Word word;
  while (nodes[id].parent != kNoParent) {
    word.push_back(nodes[id].letter);
    id = nodes[id].parent;
  }
  return word;
}

struct BackwardSearch {
  enum class Status { closed, budget_exhausted, early_exit };
  Status status = Status::closed;
  SubsetStore store;
  std::uint32_t best = kNoParent;  // node id of the current best subset

  /// Explores the family of full preimages of singletons. `stop_at` turns
  /// the run into a decision search that exits as soon as a subset of at
  /// least that many states is visited (0 = run to closure).
  void run(const Automaton& a, const SolverOptions& options, std::size_t stop_at) {
    const std::uint32_t n = a.state_count();
    const InverseTable inv = InverseTable::build(a);
    std::vector<std::uint32_t> antichain;  // ids of inclusion-maximal subsets

    auto visit = [&](StateSet&& set, std::uint32_t parent, Letter letter, State target) -> bool {
      // Returns false when the search must stop (budget or early exit).
      if (store.index.contains(set)) return true;  // duplicate
      if (store.nodes.size() >= options.node_budget) {
        status = Status::budget_exhausted;
        return false;
      }
      if (options.antichain_pruning) {
        for (std::uint32_t id : antichain) {
          if (set.is_subset_of(*store.nodes[id].set)) return true;  // dominated, skip
        }
      }
      const std::uint32_t id = store.insert(std::move(set), parent, letter, target);
      if (id == kNoParent) return true;  // duplicate
      const StateSet& stored = *store.nodes[id].set;
      if (best == kNoParent || stored.size() > store.nodes[best].set->size() ||
          (stored.size() == store.nodes[best].set->size() &&
           lex_less(stored, *store.nodes[best].set))) {
        best = id;
      }
      if (options.antichain_pruning) {
        std::erase_if(antichain, [&](std::uint32_t other) {
          return store.nodes[other].set->is_subset_of(stored);
        });
        antichain.push_back(id);
      }
      if (stop_at != 0 && stored.size() >= stop_at) {
        status = Status::early_exit;
        return false;
      }
      return true;
    };

    for (State q = 0; q < n; ++q) {
      if (!visit(StateSet::singleton(n, q), kNoParent, 0, q)) return;
    }
    for (std::uint32_t head = 0; head < store.nodes.size(); ++head) {
      for (Letter x = 0; x < a.alphabet_size(); ++x) {
        StateSet pre = letter_preimage(inv, *store.nodes[head].set, x);
        if (pre.empty()) continue;  // dead branch: preimages of empty stay empty
        if (!visit(std::move(pre), head, x, store.nodes[head].target)) return;
      }
    }
    status = Status::closed;
  }
};

MaxSyncResult result_from_backward(const Automaton& a, const BackwardSearch& search,
                                   const SolverOptions& options) {
  const SubsetNode& node = search.store.nodes[search.best];
  MaxSyncResult result;
  result.best.set = *node.set;
  result.size = node.set->size();
  result.explored = search.store.nodes.size();

  // The chain word is a valid synchronizer, but the canonical witness is the
  // shortest (then lexicographically smallest) word, which the forward
  // search yields directly.
  DecideResult canonical = decide_sync_set(a, *node.set, options);
  if (canonical.outcome == DecideResult::Outcome::synchronizing) {
    result.best.word = canonical.witness->word;
    result.best.target = canonical.witness->target;
  } else {
    result.best.word = backward_chain_word(search.store.nodes, search.best);
    result.best.target = node.target;
  }
  return result;
}

/// Decreasing-cardinality subset enumeration over `pool`, calling `fn` for
/// each subset until it returns true. Subsets of equal cardinality arrive in
/// lexicographic member order, matching the solver tie-break.
template <typename F>
void for_each_subset_descending(const std::vector<State>& pool, std::uint32_t universe, F&& fn) {
  const std::size_t n = pool.size();
  for (std::size_t m = n; m >= 1; --m) {
    std::vector<std::size_t> pick(m);
    for (std::size_t i = 0; i < m; ++i) pick[i] = i;
    for (;;) {
      StateSet candidate(universe);
      for (std::size_t i : pick) candidate.insert(pool[i]);
      if (fn(candidate)) return;
      // next combination in lexicographic order
      std::size_t i = m;
      while (i > 0 && pick[i - 1] == n - m + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < m; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
}

std::vector<State> unary_power_map(const Automaton& a) {
  // f^n by repeated squaring on the exponent; n applications are enough to
  // drive every state into its cycle.
  const std::uint32_t n = a.state_count();
  std::vector<State> base(n);
  for (State q = 0; q < n; ++q) base[q] = a.next(q, 0);
  std::vector<State> power(n);
  for (State q = 0; q < n; ++q) power[q] = q;
  std::uint64_t exponent = n;
  std::vector<State> scratch(n);
  while (exponent > 0) {
    if (exponent & 1) {
      for (State q = 0; q < n; ++q) scratch[q] = base[power[q]];
      power.swap(scratch);
    }
    exponent >>= 1;
    if (exponent > 0) {
      for (State q = 0; q < n; ++q) scratch[q] = base[base[q]];
      base.swap(scratch);
    }
  }
  return power;
}

}  // namespace

DecideResult decide_sync_set(const Automaton& a, const StateSet& s, SolverOptions options) {
  require(s.universe() == a.state_count(), "state set universe does not match the automaton");
  require(!s.empty(), "decide_sync_set requires a nonempty set");

  DecideResult result;
  if (s.is_singleton()) {
    result.outcome = DecideResult::Outcome::synchronizing;
    result.witness = SyncWitness{s, {}, s.first()};
    result.explored = 1;
    return result;
  }

  SubsetStore store;
  store.insert(s, kNoParent, 0, 0);
  // Children are generated parents-in-order with letters ascending, so the
  // first singleton found carries the lexicographically smallest word among
  // the shortest synchronizing words.
  for (std::uint32_t head = 0; head < store.nodes.size(); ++head) {
    for (Letter x = 0; x < a.alphabet_size(); ++x) {
      StateSet image = apply_letter(a, *store.nodes[head].set, x);
      if (store.index.contains(image)) continue;
      if (store.nodes.size() >= options.node_budget) {
        result.outcome = DecideResult::Outcome::budget_exhausted;
        result.explored = store.nodes.size();
        return result;
      }
      const bool singleton = image.is_singleton();
      const State target = singleton ? image.first() : State{0};
      const std::uint32_t id = store.insert(std::move(image), head, x, target);
      if (singleton) {
        result.outcome = DecideResult::Outcome::synchronizing;
        result.witness = SyncWitness{s, forward_chain_word(store.nodes, id), target};
        result.explored = store.nodes.size();
        return result;
      }
    }
  }
  result.outcome = DecideResult::Outcome::not_synchronizing;
  result.explored = store.nodes.size();
  return result;
}

MaxSyncOutcome max_sync_set_exact(const Automaton& a, SolverOptions options) {
  BackwardSearch search;
  search.run(a, options, 0);

  MaxSyncOutcome outcome;
  outcome.status = search.status == BackwardSearch::Status::closed
                       ? MaxSyncOutcome::Status::complete
                       : MaxSyncOutcome::Status::budget_exhausted;
  if (search.best == kNoParent) {
    // Budget too small to even seed the singletons; report state 0 as the
    // trivial lower bound.
    outcome.result.best = SyncWitness{StateSet::singleton(a.state_count(), 0), {}, 0};
    outcome.result.size = 1;
    outcome.result.explored = search.store.nodes.size();
    return outcome;
  }
  outcome.result = result_from_backward(a, search, options);
  return outcome;
}

MaxSyncResult max_sync_set_naive(const Automaton& a) {
  const std::uint32_t n = a.state_count();
  require(n <= 12, "max_sync_set_naive supports at most 12 states, got " + std::to_string(n));

  std::vector<State> pool(n);
  for (State q = 0; q < n; ++q) pool[q] = q;

  MaxSyncResult result;
  std::uint64_t examined = 0;
  for_each_subset_descending(pool, n, [&](const StateSet& candidate) {
    ++examined;
    DecideResult decision = decide_sync_set(a, candidate);
    if (decision.outcome != DecideResult::Outcome::synchronizing) return false;
    result.best = *decision.witness;
    result.size = candidate.size();
    return true;
  });
  result.explored = examined;
  return result;
}

MaxSyncResult max_sync_set_unary(const Automaton& a) {
  require(is_unary(a), "max_sync_set_unary requires a single-letter automaton");
  const std::uint32_t n = a.state_count();
  const std::vector<State> power = unary_power_map(a);

  std::vector<std::uint32_t> fibre_size(n, 0);
  for (State q = 0; q < n; ++q) ++fibre_size[power[q]];
  std::uint32_t best_size = 0;
  for (std::uint32_t size : fibre_size) best_size = std::max(best_size, size);
  // Fibres are disjoint, so the lexicographically smallest maximum fibre is
  // the one containing the smallest state among maximal fibres.
  State target = 0;
  for (State q = 0; q < n; ++q) {
    if (fibre_size[power[q]] == best_size) {
      target = power[q];
      break;
    }
  }

  MaxSyncResult result;
  result.best.set = StateSet(n);
  for (State q = 0; q < n; ++q) {
    if (power[q] == target) result.best.set.insert(q);
  }
  result.best.word = Word(n, 0);
  result.best.target = target;
  result.size = best_size;
  result.explored = n;
  return result;
}

DecisionResult max_sync_set_decision(const Automaton& a, std::size_t bound,
                                     SolverOptions options) {
  DecisionResult result;
  if (bound == 0) {
    result.outcome = DecisionResult::Outcome::yes;
    return result;
  }
  BackwardSearch search;
  search.run(a, options, bound);
  result.explored = search.store.nodes.size();
  switch (search.status) {
    case BackwardSearch::Status::early_exit:
      result.outcome = DecisionResult::Outcome::yes;
      break;
    case BackwardSearch::Status::closed:
      result.outcome = DecisionResult::Outcome::no;
      break;
    case BackwardSearch::Status::budget_exhausted:
      result.outcome = DecisionResult::Outcome::indeterminate;
      break;
  }
  return result;
}

MaxSyncResult max_sync_subset_within(const Automaton& a, const StateSet& restriction,
                                     SolverOptions options) {
  require(restriction.universe() == a.state_count(),
          "restriction universe does not match the automaton");
  require(!restriction.empty(), "restriction must be nonempty");
  require(restriction.size() <= 20, "max_sync_subset_within supports at most 20 members, got " +
                                        std::to_string(restriction.size()));

  const std::vector<State> pool = restriction.members();
  MaxSyncResult result;
  std::uint64_t examined = 0;
  for_each_subset_descending(pool, a.state_count(), [&](const StateSet& candidate) {
    ++examined;
    DecideResult decision = decide_sync_set(a, candidate, options);
    if (decision.outcome != DecideResult::Outcome::synchronizing) return false;
    result.best = *decision.witness;
    result.size = candidate.size();
    return true;
  });
  result.explored = examined;
  return result;
}

bool is_synchronizing(const Automaton& a) {
  const std::uint32_t n = a.state_count();
  if (n == 1) return true;
  if (is_unary(a)) {
    const std::vector<State> power = unary_power_map(a);
    for (State q = 1; q < n; ++q) {
      if (power[q] != power[0]) return false;
    }
    return true;
  }

  // Backward reachability from the diagonal of the pair automaton: the whole
  // automaton synchronizes iff every unordered pair can be merged.
  const InverseTable inv = InverseTable::build(a);
  std::vector<char> merged(std::size_t{n} * n, 0);
  std::vector<std::uint64_t> queue;
  queue.reserve(n);
  std::uint64_t marked = 0;
  auto mark = [&](State lo, State hi) {
    if (lo > hi) std::swap(lo, hi);
    const std::size_t id = std::size_t{lo} * n + hi;
    if (!merged[id]) {
      merged[id] = 1;
      ++marked;
      queue.push_back(id);
    }
  };
  for (State q = 0; q < n; ++q) mark(q, q);

  for (std::size_t head = 0; head < queue.size(); ++head) {
    const State p = static_cast<State>(queue[head] / n);
    const State q = static_cast<State>(queue[head] % n);
    for (Letter x = 0; x < a.alphabet_size(); ++x) {
      inv.for_each_preimage(x, p, [&](State u) {
        inv.for_each_preimage(x, q, [&](State v) { mark(u, v); });
      });
    }
  }
  return marked == std::uint64_t{n} * (n + 1) / 2;
}

std::optional<Word> find_sync_word(const Automaton& a) {
  const std::uint32_t n = a.state_count();
  if (n == 1) return Word{};
  if (!is_synchronizing(a)) return std::nullopt;

  // Shortest word merging one specific pair, by forward BFS over ordered
  // pairs with letters tried in ascending order.
  const auto merge_pair = [&](State p, State q) -> Word {
    std::vector<std::uint32_t> parent(std::size_t{n} * n, kNoParent);
    std::vector<Letter> via(std::size_t{n} * n, 0);
    std::vector<std::uint32_t> queue;
    const auto id_of = [n](State lo, State hi) {
      if (lo > hi) std::swap(lo, hi);
      return static_cast<std::uint32_t>(std::size_t{lo} * n + hi);
    };
    const std::uint32_t start = id_of(p, q);
    parent[start] = start;
    queue.push_back(start);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::uint32_t id = queue[head];
      const State u = static_cast<State>(id / n);
      const State v = static_cast<State>(id % n);
      for (Letter x = 0; x < a.alphabet_size(); ++x) {
        const std::uint32_t next = id_of(a.next(u, x), a.next(v, x));
        if (parent[next] != kNoParent) continue;
        parent[next] = id;
        via[next] = x;
        if (next / n == next % n) {
          Word word;
          for (std::uint32_t at = next; at != start; at = parent[at]) word.push_back(via[at]);
          std::reverse(word.begin(), word.end());
          return word;
        }
        queue.push_back(next);
      }
    }
    throw std::logic_error("unmergeable pair in a synchronizing automaton");
  };

  StateSet current = StateSet::full(n);
  Word word;
  while (current.size() > 1) {
    State first = 0;
    State second = 0;
    bool have_first = false;
    for (State q = 0; q < n; ++q) {
      if (!current.contains(q)) continue;
      if (!have_first) {
        first = q;
        have_first = true;
      } else {
        second = q;
        break;
      }
    }
    const Word merge = merge_pair(first, second);
    current = apply_word(a, current, merge);
    word.insert(word.end(), merge.begin(), merge.end());
  }
  return word;
}

}  // namespace syncset
