#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "syncset/graph.hpp"
#include "syncset/solvers.hpp"

namespace syncset {

/// One mismatching instance. `seed` alone reproduces the instance: random
/// trials record the derived per-trial seed, exhaustive sweeps record the
/// edge-subset mask (combined with the vertex count in `instance`).
struct VerifyFailure {
  std::uint64_t seed = 0;
  std::string instance;
  std::string expected;
  std::string actual;
};

struct VerifyReport {
  std::string kind;
  std::uint64_t trials = 0;  // instances actually checked (skips excluded)
  std::vector<VerifyFailure> failures;
  double elapsed_seconds = 0.0;
  bool ok() const { return failures.empty(); }
};

struct VerifyOptions {
  std::uint64_t trials = 0;  // 0 = kind-specific default
  std::uint64_t seed = 1;
  std::uint32_t max_p = 0;  // 0 = kind-specific default
  std::uint32_t max_n = 0;
  std::uint32_t max_k = 0;
  double edge_probability = 0.5;
  std::uint64_t node_budget = kDefaultNodeBudget;
};

/// All labelled graphs on p vertices (every subset of the C(p,2) edge
/// slots, in mask order); p <= 6 enforced.
std::vector<Graph> all_graphs(std::uint32_t p);

/// Padding construction: on random binary automata with random nonempty
/// sets, the set synchronizes iff the padded automaton admits a
/// synchronizing set of at least the threshold size.
VerifyReport verify_thm1(const VerifyOptions& options = {});

/// Weakly acyclic gadget: maximum synchronizing set size equals
/// alpha(G) + 1. Exhaustive over small graphs plus seeded random graphs.
VerifyReport verify_thm2(const VerifyOptions& options = {});

/// Pre-replication layered gadget: the largest synchronizing subset of the
/// first layer has size alpha(G). Exhaustive over graphs with 2..max_p
/// vertices.
VerifyReport verify_lemma2(const VerifyOptions& options = {});

/// Replicated layered gadget: maximum synchronizing set size equals
/// p * alpha(G) + 1. Exhaustive over graphs with 2..max_p vertices;
/// instances with alpha(G) < 2 fall outside the claim and are skipped.
VerifyReport verify_thm3(const VerifyOptions& options = {});

/// Weakly acyclic layered gadget: maximum synchronizing set size lies in
/// [p^2 alpha(G), p^2 alpha(G) + p(p-1) + 1]. Exhaustive over graphs with
/// 2..max_p vertices.
VerifyReport verify_thm4(const VerifyOptions& options = {});

/// Unary solver against the naive oracle on seeded random unary automata.
VerifyReport verify_unary(const VerifyOptions& options = {});

/// Exact solver against the naive oracle on seeded random automata.
VerifyReport verify_oracle_equivalence(const VerifyOptions& options = {});

/// Dispatch by CLI kind name: thm1, thm2, thm3, lemma2, thm4, unary,
/// oracle-equiv. Unknown kinds raise std::invalid_argument.
VerifyReport run_verify(std::string_view kind, const VerifyOptions& options = {});

/// Report as JSON (kind, trials, failures, ok). Timing is deliberately left
/// out so equal runs serialize byte-identically; elapsed_seconds is for
/// logging.
std::string serialize_report(const VerifyReport& report);

}  // namespace syncset
