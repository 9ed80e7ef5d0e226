#include "syncset/verify.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <utility>

#include "json.hpp"
#include "syncset/automaton_io.hpp"
#include "syncset/graph_io.hpp"
#include "syncset/reductions.hpp"
#include "syncset/rng.hpp"

namespace syncset {

namespace {

using nlohmann::ordered_json;

class Stopwatch {
public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

std::string graph_summary(const Graph& g) { return graph_to_json(g).dump(); }

std::string outcome_text(const MaxSyncOutcome& outcome) {
  if (outcome.status == MaxSyncOutcome::Status::budget_exhausted) {
    return "budget exhausted at size " + std::to_string(outcome.result.size);
  }
  return std::to_string(outcome.result.size);
}

void check_exact_size(VerifyReport& report, const Automaton& automaton, std::size_t expected,
                      std::uint64_t seed, const std::string& instance,
                      const VerifyOptions& options) {
  SolverOptions solver{options.node_budget};
  const MaxSyncOutcome outcome = max_sync_set_exact(automaton, solver);
  ++report.trials;
  if (outcome.status != MaxSyncOutcome::Status::complete ||
      outcome.result.size != expected) {
    report.failures.push_back(
        {seed, instance, std::to_string(expected), outcome_text(outcome)});
  }
}

/// Deterministic per-trial seed stream: trial i uses seed + i, so a failure
/// reruns in isolation with the recorded seed.
std::uint64_t trial_seed(const VerifyOptions& options, std::uint64_t trial) {
  return options.seed + trial;
}

void sort_failures(VerifyReport& report) {
  std::stable_sort(report.failures.begin(), report.failures.end(),
                   [](const VerifyFailure& a, const VerifyFailure& b) { return a.seed < b.seed; });
}

}  // namespace

std::vector<Graph> all_graphs(std::uint32_t p) {
  if (p < 1 || p > 6) throw std::invalid_argument("all_graphs supports 1..6 vertices");
  std::vector<Graph::Edge> slots;
  for (std::uint32_t i = 0; i < p; ++i) {
    for (std::uint32_t j = i + 1; j < p; ++j) slots.emplace_back(i, j);
  }
  std::vector<Graph> graphs;
  graphs.reserve(std::size_t{1} << slots.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::vector<Graph::Edge> edges;
    for (std::size_t bit = 0; bit < slots.size(); ++bit) {
      if ((mask >> bit) & 1) edges.push_back(slots[bit]);
    }
    graphs.emplace_back(p, std::move(edges));
  }
  return graphs;
}

VerifyReport verify_thm1(const VerifyOptions& options) {
  VerifyReport report;
  report.kind = "thm1";
  Stopwatch watch;
  const std::uint64_t trials = options.trials == 0 ? 200 : options.trials;
  const std::uint32_t max_n = options.max_n == 0 ? 6 : options.max_n;

  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    const std::uint64_t seed = trial_seed(options, trial);
    SplitMix64 rng(seed);
    const auto n = static_cast<std::uint32_t>(1 + rng.next_below(max_n));
    const Automaton automaton = random_automaton(n, 2, rng.next());
    StateSet set(n);
    const std::uint64_t mask = 1 + rng.next_below((std::uint64_t{1} << n) - 1);
    for (std::uint32_t q = 0; q < n; ++q) {
      if ((mask >> q) & 1) set.insert(q);
    }

    SolverOptions solver{options.node_budget};
    const DecideResult direct = decide_sync_set(automaton, set, solver);
    const GadgetArtifact padded = padding_construction(automaton, set);
    const DecisionResult padded_decision =
        max_sync_set_decision(padded.automaton, padded.expected.threshold, solver);

    ++report.trials;
    const std::string instance =
        serialize_automaton(automaton) + "set=" + ordered_json(set.members()).dump();
    if (direct.outcome == DecideResult::Outcome::budget_exhausted ||
        padded_decision.outcome == DecisionResult::Outcome::indeterminate) {
      report.failures.push_back({seed, instance, "a definite answer", "budget exhausted"});
      continue;
    }
    const bool lhs = direct.outcome == DecideResult::Outcome::synchronizing;
    const bool rhs = padded_decision.outcome == DecisionResult::Outcome::yes;
    if (lhs != rhs) {
      report.failures.push_back({seed, instance,
                                 lhs ? "padded decision yes" : "padded decision no",
                                 rhs ? "yes" : "no"});
    }
  }

  sort_failures(report);
  report.elapsed_seconds = watch.seconds();
  return report;
}

VerifyReport verify_thm2(const VerifyOptions& options) {
  VerifyReport report;
  report.kind = "thm2";
  Stopwatch watch;
  const std::uint64_t trials = options.trials == 0 ? 100 : options.trials;
  const std::uint32_t max_p = options.max_p == 0 ? 4 : options.max_p;

  // Exhaustive sweep over every labelled graph on up to three vertices, then
  // the seeded random battery.
  for (std::uint32_t p = 1; p <= std::min<std::uint32_t>(max_p, 3); ++p) {
    std::uint64_t mask = 0;
    for (const Graph& g : all_graphs(p)) {
      const GadgetArtifact artifact = gadget_weakly_acyclic(g);
      check_exact_size(report, artifact.automaton, artifact.expected.exact, mask,
                       "exhaustive " + graph_summary(g), options);
      ++mask;
    }
  }
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    const std::uint64_t seed = trial_seed(options, trial);
    const auto p = static_cast<std::uint32_t>(1 + trial % max_p);
    const Graph g = random_graph(p, options.edge_probability, seed);
    const GadgetArtifact artifact = gadget_weakly_acyclic(g);
    check_exact_size(report, artifact.automaton, artifact.expected.exact, seed, graph_summary(g),
                     options);
  }

  sort_failures(report);
  report.elapsed_seconds = watch.seconds();
  return report;
}

VerifyReport verify_lemma2(const VerifyOptions& options) {
  VerifyReport report;
  report.kind = "lemma2";
  Stopwatch watch;
  const std::uint32_t max_p = options.max_p == 0 ? 3 : options.max_p;

  for (std::uint32_t p = 2; p <= max_p; ++p) {
    std::uint64_t mask = 0;
    for (const Graph& g : all_graphs(p)) {
      const GadgetArtifact artifact = gadget_binary_pre_replication(g);
      StateSet first_layer(artifact.automaton.state_count());
      for (State entry : artifact.params.entry_states) first_layer.insert(entry);
      const MaxSyncResult best =
          max_sync_subset_within(artifact.automaton, first_layer, {options.node_budget});
      ++report.trials;
      if (best.size != artifact.expected.exact) {
        report.failures.push_back({mask, "exhaustive " + graph_summary(g),
                                   std::to_string(artifact.expected.exact),
                                   std::to_string(best.size)});
      }
      ++mask;
    }
  }

  sort_failures(report);
  report.elapsed_seconds = watch.seconds();
  return report;
}

VerifyReport verify_thm3(const VerifyOptions& options) {
  VerifyReport report;
  report.kind = "thm3";
  Stopwatch watch;
  const std::uint32_t max_p = options.max_p == 0 ? 3 : options.max_p;

  for (std::uint32_t p = 2; p <= max_p; ++p) {
    std::uint64_t mask = 0;
    for (const Graph& g : all_graphs(p)) {
      const GadgetArtifact artifact = gadget_binary(g);
      if (!artifact.expected.reliable) {
        ++mask;  // alpha(G) < 2: outside the claim
        continue;
      }
      check_exact_size(report, artifact.automaton, artifact.expected.exact, mask,
                       "exhaustive " + graph_summary(g), options);
      ++mask;
    }
  }

  sort_failures(report);
  report.elapsed_seconds = watch.seconds();
  return report;
}

VerifyReport verify_thm4(const VerifyOptions& options) {
  VerifyReport report;
  report.kind = "thm4";
  Stopwatch watch;
  const std::uint32_t max_p = options.max_p == 0 ? 3 : options.max_p;

  for (std::uint32_t p = 2; p <= max_p; ++p) {
    std::uint64_t mask = 0;
    for (const Graph& g : all_graphs(p)) {
      const GadgetArtifact artifact = gadget_binary_weakly_acyclic(g);
      const MaxSyncOutcome outcome =
          max_sync_set_exact(artifact.automaton, {options.node_budget});
      ++report.trials;
      const std::string expected = "[" + std::to_string(artifact.expected.lower) + ", " +
                                   std::to_string(artifact.expected.upper) + "]";
      if (outcome.status != MaxSyncOutcome::Status::complete ||
          outcome.result.size < artifact.expected.lower ||
          outcome.result.size > artifact.expected.upper) {
        report.failures.push_back(
            {mask, "exhaustive " + graph_summary(g), expected, outcome_text(outcome)});
      }
      ++mask;
    }
  }

  sort_failures(report);
  report.elapsed_seconds = watch.seconds();
  return report;
}

VerifyReport verify_unary(const VerifyOptions& options) {
  VerifyReport report;
  report.kind = "unary";
  Stopwatch watch;
  const std::uint64_t trials = options.trials == 0 ? 200 : options.trials;
  const std::uint32_t max_n = options.max_n == 0 ? 12 : options.max_n;
  if (max_n > 12) throw std::invalid_argument("verify unary is capped at n = 12 by the oracle");

  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    const std::uint64_t seed = trial_seed(options, trial);
    SplitMix64 rng(seed);
    const auto n = static_cast<std::uint32_t>(1 + rng.next_below(max_n));
    const Automaton automaton = random_automaton(n, 1, rng.next());

    const MaxSyncResult fast = max_sync_set_unary(automaton);
    const MaxSyncResult oracle = max_sync_set_naive(automaton);
    ++report.trials;

    const StateSet replay = apply_word(automaton, fast.best.set, fast.best.word);
    const bool replay_ok =
        replay == StateSet::singleton(automaton.state_count(), fast.best.target);
    if (fast.size != oracle.size || fast.best.word.size() != n || !replay_ok) {
      report.failures.push_back({seed, serialize_automaton(automaton),
                                 "size " + std::to_string(oracle.size) + ", replayable word of length " +
                                     std::to_string(n),
                                 "size " + std::to_string(fast.size) + ", word length " +
                                     std::to_string(fast.best.word.size()) +
                                     (replay_ok ? "" : ", replay mismatch")});
    }
  }

  sort_failures(report);
  report.elapsed_seconds = watch.seconds();
  return report;
}

VerifyReport verify_oracle_equivalence(const VerifyOptions& options) {
  VerifyReport report;
  report.kind = "oracle-equiv";
  Stopwatch watch;
  const std::uint64_t trials = options.trials == 0 ? 200 : options.trials;
  const std::uint32_t max_n = options.max_n == 0 ? 10 : options.max_n;
  const std::uint32_t max_k = options.max_k == 0 ? 3 : options.max_k;
  if (max_n > 12) {
    throw std::invalid_argument("verify oracle-equiv is capped at n = 12 by the oracle");
  }

  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    const std::uint64_t seed = trial_seed(options, trial);
    SplitMix64 rng(seed);
    const auto n = static_cast<std::uint32_t>(1 + rng.next_below(max_n));
    const auto k = static_cast<std::uint32_t>(1 + rng.next_below(max_k));
    const Automaton automaton = random_automaton(n, k, rng.next());

    const MaxSyncOutcome exact = max_sync_set_exact(automaton, {options.node_budget});
    const MaxSyncResult oracle = max_sync_set_naive(automaton);
    ++report.trials;

    const StateSet replay =
        apply_word(automaton, exact.result.best.set, exact.result.best.word);
    const bool replay_ok =
        replay == StateSet::singleton(automaton.state_count(), exact.result.best.target);
    if (exact.status != MaxSyncOutcome::Status::complete || exact.result.size != oracle.size ||
        !replay_ok) {
      report.failures.push_back({seed, serialize_automaton(automaton),
                                 "size " + std::to_string(oracle.size),
                                 outcome_text(exact) + (replay_ok ? "" : ", replay mismatch")});
    }
  }

  sort_failures(report);
  report.elapsed_seconds = watch.seconds();
  return report;
}

VerifyReport run_verify(std::string_view kind, const VerifyOptions& options) {
  if (kind == "thm1") return verify_thm1(options);
  if (kind == "thm2") return verify_thm2(options);
  if (kind == "lemma2") return verify_lemma2(options);
  if (kind == "thm3") return verify_thm3(options);
  if (kind == "thm4") return verify_thm4(options);
  if (kind == "unary") return verify_unary(options);
  if (kind == "oracle-equiv") return verify_oracle_equivalence(options);
  throw std::invalid_argument("unknown verify kind \"" + std::string(kind) +
                              "\" (expected thm1|thm2|thm3|lemma2|thm4|unary|oracle-equiv)");
}

std::string serialize_report(const VerifyReport& report) {
  ordered_json doc;
  doc["kind"] = report.kind;
  doc["trials"] = report.trials;
  ordered_json failures = ordered_json::array();
  for (const VerifyFailure& failure : report.failures) {
    ordered_json entry;
    entry["seed"] = failure.seed;
    entry["instance"] = failure.instance;
    entry["expected"] = failure.expected;
    entry["actual"] = failure.actual;
    failures.push_back(std::move(entry));
  }
  doc["failures"] = std::move(failures);
  doc["ok"] = report.ok();
  return doc.dump() + "\n";
}

}  // namespace syncset
