#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "syncset/automaton.hpp"
#include "syncset/reductions.hpp"
#include "syncset/rng.hpp"
#include "syncset/solvers.hpp"
#include "syncset/state_set.hpp"

using namespace syncset;

namespace {

/// Replays a witness and checks its contract: the word maps the set onto
/// exactly {target}.
void check_witness(const Automaton& a, const SyncWitness& witness) {
  REQUIRE_FALSE(witness.set.empty());
  CHECK(apply_word(a, witness.set, witness.word) ==
        StateSet::singleton(a.state_count(), witness.target));
}

StateSet random_nonempty_set(std::uint32_t n, SplitMix64& rng) {
  StateSet s(n);
  while (s.empty()) {
    for (State q = 0; q < n; ++q) {
      if (rng.next_below(2) == 0) s.insert(q);
    }
  }
  return s;
}

}  // namespace

TEST_CASE("decide_sync_set basics") {
  const Automaton a1 = fixtures::example_a1();

  SUBCASE("singletons synchronize with the empty word") {
    const DecideResult r = decide_sync_set(a1, StateSet::singleton(21, 7));
    REQUIRE(r.outcome == DecideResult::Outcome::synchronizing);
    CHECK(r.witness->word.empty());
    CHECK(r.witness->target == 7);
    CHECK(r.explored == 1);
  }

  SUBCASE("independent first-layer pair synchronizes in three letters") {
    const DecideResult r = decide_sync_set(a1, StateSet(21, {0, 1}));
    REQUIRE(r.outcome == DecideResult::Outcome::synchronizing);
    CHECK(r.witness->word == Word{1, 1, 0});
    CHECK(r.witness->target == 18);
    check_witness(a1, *r.witness);
  }

  SUBCASE("a permutation never merges anything") {
    const DecideResult r = decide_sync_set(fixtures::cycle3(), StateSet(3, {0, 1}));
    CHECK(r.outcome == DecideResult::Outcome::not_synchronizing);
    CHECK_FALSE(r.witness.has_value());
    CHECK(r.explored == 3);  // {0,1} -> {1,2} -> {0,2} closes the orbit
  }

  SUBCASE("input validation") {
    CHECK_THROWS_AS(decide_sync_set(a1, StateSet(21)), std::invalid_argument);
    CHECK_THROWS_AS(decide_sync_set(a1, StateSet(3, {0})), std::invalid_argument);
  }

  SUBCASE("budget exhaustion is a distinct outcome") {
    const Automaton big = random_automaton(30, 2, 5);
    const DecideResult r = decide_sync_set(big, StateSet::full(30), {.node_budget = 3});
    CHECK(r.outcome == DecideResult::Outcome::budget_exhausted);
    CHECK(r.explored <= 3);
  }
}

TEST_CASE("decide_sync_set returns the lexicographically smallest shortest word") {
  // Exhaustive cross-check on small random instances: no shorter word works,
  // and no word of equal length that is lexicographically smaller works.
  std::uint32_t checked = 0;
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    SplitMix64 rng(seed);
    const auto n = static_cast<std::uint32_t>(2 + rng.next_below(5));  // n <= 6
    const Automaton a = random_automaton(n, 2, rng.next());
    const StateSet s = random_nonempty_set(n, rng);

    const DecideResult r = decide_sync_set(a, s);
    if (r.outcome != DecideResult::Outcome::synchronizing) continue;
    check_witness(a, *r.witness);
    const std::size_t len = r.witness->word.size();
    if (len > 14) continue;  // keep the 2^len sweep bounded; never hit in practice

    ++checked;
    const auto synchronizes = [&](const Word& w) {
      return apply_word(a, s, w).is_singleton();
    };
    // Enumerate every word of length < len, and the shorter-or-equal prefix
    // order guarantees we also see all lexicographically smaller words of
    // length == len before the witness itself.
    for (std::size_t length = 0; length < len; ++length) {
      Word w(length, 0);
      while (true) {
        CHECK_FALSE(synchronizes(w));
        std::size_t pos = length;
        while (pos > 0 && w[pos - 1] == 1) w[--pos] = 0;
        if (pos == 0) break;
        w[pos - 1] = 1;
      }
    }
    Word w(len, 0);
    while (w < r.witness->word) {
      CHECK_FALSE(synchronizes(w));
      std::size_t pos = len;
      while (pos > 0 && w[pos - 1] == 1) w[--pos] = 0;
      REQUIRE(pos > 0);
      w[pos - 1] = 1;
    }
  }
  CHECK(checked >= 20);  // the sweep must actually exercise witnesses
}

TEST_CASE("synchronizing sets are downward closed") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    SplitMix64 rng(seed);
    const auto n = static_cast<std::uint32_t>(2 + rng.next_below(7));
    const auto k = static_cast<std::uint32_t>(1 + rng.next_below(3));
    const Automaton a = random_automaton(n, k, rng.next());
    const StateSet s = random_nonempty_set(n, rng);

    if (decide_sync_set(a, s).outcome != DecideResult::Outcome::synchronizing) continue;
    // Every one-smaller subset must synchronize too.
    s.for_each([&](State drop) {
      StateSet sub = s;
      sub.erase(drop);
      if (sub.empty()) return;
      CHECK(decide_sync_set(a, sub).outcome == DecideResult::Outcome::synchronizing);
    });
  }
}

TEST_CASE("max_sync_set_exact on known instances") {
  SUBCASE("single self-loop") {
    const MaxSyncOutcome r = max_sync_set_exact(Automaton(1, 1, {0}));
    REQUIRE(r.status == MaxSyncOutcome::Status::complete);
    CHECK(r.result.size == 1);
    CHECK(r.result.best.word.empty());
  }

  SUBCASE("vertex-letter gadget of the example graph") {
    const GadgetArtifact g = gadget_weakly_acyclic(fixtures::example_graph());
    const MaxSyncOutcome r = max_sync_set_exact(g.automaton);
    REQUIRE(r.status == MaxSyncOutcome::Status::complete);
    CHECK(r.result.size == 3);
    CHECK(r.result.best.set == StateSet(7, {0, 1, 6}));
    CHECK(r.result.best.word == Word{0, 1});
    CHECK(r.result.best.target == 6);
    check_witness(g.automaton, r.result.best);
  }

  SUBCASE("replicated layered gadget of the example graph") {
    const GadgetArtifact g = gadget_binary(fixtures::example_graph());
    const MaxSyncOutcome r = max_sync_set_exact(g.automaton);
    REQUIRE(r.status == MaxSyncOutcome::Status::complete);
    CHECK(r.result.size == 7);
    CHECK(r.result.best.set == StateSet(33, {12, 15, 16, 21, 22, 27, 28}));
    CHECK(r.result.best.word == Word{1, 1, 0});
    CHECK(r.result.best.target == 12);
    check_witness(g.automaton, r.result.best);
  }

  SUBCASE("unary funnel") {
    const MaxSyncOutcome r = max_sync_set_exact(fixtures::funnel2());
    CHECK(r.result.size == 2);
    CHECK(r.result.best.word == Word{0});
  }

  SUBCASE("ties break to the lexicographically smallest set") {
    // Two maximum sets {0,1,2} (letter 0 into the sink 2) and {0,1,3}
    // (letter 1 into the sink 3); the smaller one must be reported.
    const Automaton two_sinks(4, 2, {2, 3, 2, 3, 2, 2, 3, 3});
    const MaxSyncOutcome r = max_sync_set_exact(two_sinks);
    CHECK(r.result.size == 3);
    CHECK(r.result.best.set == StateSet(4, {0, 1, 2}));
    CHECK(r.result.best.word == Word{0});
    CHECK(r.result.best.target == 2);
  }

  SUBCASE("word ties break to the lexicographically smallest word") {
    // Both letters funnel everything into state 2 in one step, so the
    // shortest words [0] and [1] tie and [0] must be returned.
    const Automaton either(3, 2, {2, 2, 2, 2, 2, 2});
    const MaxSyncOutcome r = max_sync_set_exact(either);
    CHECK(r.result.size == 3);
    CHECK(r.result.best.set == StateSet::full(3));
    CHECK(r.result.best.word == Word{0});
    CHECK(r.result.best.target == 2);
  }

  SUBCASE("budget exhaustion still reports a valid lower bound") {
    const Automaton big = random_automaton(30, 2, 9);
    const MaxSyncOutcome r = max_sync_set_exact(big, {.node_budget = 10});
    CHECK(r.status == MaxSyncOutcome::Status::budget_exhausted);
    CHECK(r.result.size >= 1);
    CHECK(r.result.explored <= 10);
    check_witness(big, r.result.best);
  }
}

TEST_CASE("antichain pruning does not change results") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    SplitMix64 rng(seed);
    const auto n = static_cast<std::uint32_t>(2 + rng.next_below(7));
    const auto k = static_cast<std::uint32_t>(1 + rng.next_below(3));
    const Automaton a = random_automaton(n, k, rng.next());

    const MaxSyncOutcome plain = max_sync_set_exact(a);
    const MaxSyncOutcome pruned = max_sync_set_exact(a, {.antichain_pruning = true});
    REQUIRE(plain.status == MaxSyncOutcome::Status::complete);
    REQUIRE(pruned.status == MaxSyncOutcome::Status::complete);
    CHECK(plain.result.size == pruned.result.size);
    CHECK(plain.result.best.set == pruned.result.best.set);
    check_witness(a, pruned.result.best);
  }
}

TEST_CASE("max_sync_set_naive agrees with the exact solver") {
  CHECK_THROWS_AS(max_sync_set_naive(random_automaton(13, 2, 1)), std::invalid_argument);

  CHECK(max_sync_set_naive(fixtures::funnel2()).size == 2);
  CHECK(max_sync_set_naive(fixtures::cycle3()).size == 1);

  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    SplitMix64 rng(seed);
    const auto n = static_cast<std::uint32_t>(1 + rng.next_below(8));
    const auto k = static_cast<std::uint32_t>(1 + rng.next_below(2));
    const Automaton a = random_automaton(n, k, rng.next());

    const MaxSyncResult naive = max_sync_set_naive(a);
    const MaxSyncOutcome exact = max_sync_set_exact(a);
    REQUIRE(exact.status == MaxSyncOutcome::Status::complete);
    CHECK(exact.result.size == naive.size);
    CHECK(exact.result.best.set == naive.best.set);    // same set tie-break
    CHECK(exact.result.best.word == naive.best.word);  // same canonical word
    check_witness(a, naive.best);
    check_witness(a, exact.result.best);
  }
}

TEST_CASE("max_sync_set_unary") {
  SUBCASE("rejects non-unary input") {
    CHECK_THROWS_AS(max_sync_set_unary(fixtures::cerny4()), std::invalid_argument);
  }

  SUBCASE("star collapses everything, word has length exactly n") {
    const MaxSyncResult r = max_sync_set_unary(fixtures::star5());
    CHECK(r.size == 5);
    CHECK(r.best.word == Word(5, 0));  // length n even though one letter suffices
    CHECK(r.best.target == 0);
    check_witness(fixtures::star5(), r.best);
  }

  SUBCASE("permutations only synchronize singletons") {
    CHECK(max_sync_set_unary(fixtures::cycle3()).size == 1);
  }

  SUBCASE("two-cycle with tails") {
    const Automaton a = fixtures::two_cycle_with_tails();
    const MaxSyncResult r = max_sync_set_unary(a);
    CHECK(r.size == 3);
    CHECK(r.best.set == StateSet(5, {1, 2, 3}));
    CHECK(r.best.word.size() == 5);
    check_witness(a, r.best);
    CHECK(max_sync_set_naive(a).size == 3);
  }

  SUBCASE("matches the naive oracle on random unary automata") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
      SplitMix64 rng(seed);
      const auto n = static_cast<std::uint32_t>(1 + rng.next_below(12));
      const Automaton a = random_automaton(n, 1, rng.next());
      const MaxSyncResult fast = max_sync_set_unary(a);
      CHECK(fast.size == max_sync_set_naive(a).size);
      CHECK(fast.best.word.size() == n);
      check_witness(a, fast.best);
    }
  }
}

TEST_CASE("max_sync_set_decision") {
  CHECK(max_sync_set_decision(Automaton(1, 1, {0}), 1).outcome == DecisionResult::Outcome::yes);
  CHECK(max_sync_set_decision(fixtures::cycle3(), 2).outcome == DecisionResult::Outcome::no);
  CHECK(max_sync_set_decision(fixtures::cycle3(), 0).outcome == DecisionResult::Outcome::yes);

  SUBCASE("padded instances answer the original question") {
    // Synchronizing original: threshold met.
    const GadgetArtifact yes = padding_construction(fixtures::funnel2(), StateSet(2, {0, 1}));
    CHECK(yes.automaton.state_count() == 8);
    CHECK(yes.expected.threshold == 6);
    CHECK(max_sync_set_decision(yes.automaton, 6).outcome == DecisionResult::Outcome::yes);

    // Non-synchronizing original: threshold missed.
    const GadgetArtifact no = padding_construction(fixtures::cycle3(), StateSet(3, {0, 1}));
    CHECK(no.automaton.state_count() == 11);
    CHECK(no.expected.threshold == 8);
    CHECK(max_sync_set_decision(no.automaton, 8).outcome == DecisionResult::Outcome::no);
  }

  SUBCASE("indeterminate under a starved budget") {
    const Automaton big = random_automaton(30, 2, 12);
    const DecisionResult r = max_sync_set_decision(big, 25, {.node_budget = 5});
    CHECK(r.outcome == DecisionResult::Outcome::indeterminate);
  }

  SUBCASE("early exit explores less than full closure") {
    const Automaton a1 = fixtures::example_a1();
    const DecisionResult r = max_sync_set_decision(a1, 2);
    CHECK(r.outcome == DecisionResult::Outcome::yes);
    const MaxSyncOutcome full = max_sync_set_exact(a1);
    CHECK(r.explored <= full.result.explored);
  }
}

TEST_CASE("max_sync_subset_within") {
  const Automaton a1 = fixtures::example_a1();
  const StateSet first_layer(21, {0, 1, 2});

  const MaxSyncResult r = max_sync_subset_within(a1, first_layer);
  CHECK(r.size == 2);
  CHECK(r.best.set == StateSet(21, {0, 1}));
  CHECK(r.best.set.is_subset_of(first_layer));
  check_witness(a1, r.best);

  CHECK_THROWS_AS(max_sync_subset_within(a1, StateSet(21)), std::invalid_argument);
  CHECK_THROWS_AS(max_sync_subset_within(a1, StateSet(3, {0})), std::invalid_argument);

  StateSet too_big(30);
  for (State q = 0; q < 21; ++q) too_big.insert(q);
  CHECK_THROWS_AS(max_sync_subset_within(random_automaton(30, 2, 1), too_big),
                  std::invalid_argument);
}

TEST_CASE("is_synchronizing") {
  CHECK(is_synchronizing(Automaton(1, 1, {0})));
  CHECK_FALSE(is_synchronizing(fixtures::cycle3()));
  CHECK(is_synchronizing(fixtures::cerny4()));
  CHECK(is_synchronizing(fixtures::star5()));
  CHECK(is_synchronizing(fixtures::funnel2()));
  CHECK_FALSE(is_synchronizing(fixtures::example_a1()));  // u-states never merge

  SUBCASE("consistent with the subset solvers") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      SplitMix64 rng(seed);
      const auto n = static_cast<std::uint32_t>(1 + rng.next_below(8));
      const auto k = static_cast<std::uint32_t>(1 + rng.next_below(3));
      const Automaton a = random_automaton(n, k, rng.next());

      const bool sync = is_synchronizing(a);
      const DecideResult whole = decide_sync_set(a, StateSet::full(n));
      CHECK(sync == (whole.outcome == DecideResult::Outcome::synchronizing));
      const MaxSyncOutcome best = max_sync_set_exact(a);
      REQUIRE(best.status == MaxSyncOutcome::Status::complete);
      CHECK(sync == (best.result.size == n));
    }
  }
}

TEST_CASE("find_sync_word") {
  CHECK(find_sync_word(Automaton(1, 1, {0})) == Word{});
  CHECK_FALSE(find_sync_word(fixtures::cycle3()).has_value());
  CHECK(find_sync_word(fixtures::funnel2()) == Word{0});

  SUBCASE("words replay onto a single state") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      SplitMix64 rng(seed);
      const auto n = static_cast<std::uint32_t>(1 + rng.next_below(10));
      const auto k = static_cast<std::uint32_t>(1 + rng.next_below(3));
      const Automaton a = random_automaton(n, k, rng.next());

      const std::optional<Word> word = find_sync_word(a);
      CHECK(word.has_value() == is_synchronizing(a));
      if (word) {
        CHECK(apply_word(a, StateSet::full(n), *word).is_singleton());
        CHECK(word->size() <= std::size_t{n} * n * n);
      }
    }
  }
}

TEST_CASE("solver defaults") {
  CHECK(kDefaultNodeBudget == (std::uint64_t{1} << 22));
  const SolverOptions defaults;
  CHECK(defaults.node_budget == kDefaultNodeBudget);
  CHECK_FALSE(defaults.antichain_pruning);
}
