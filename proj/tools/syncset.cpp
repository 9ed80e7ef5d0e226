// syncset: command-line front end for the synchronizing-set toolkit.
//
// Machine output is JSON on stdout (or --out); logs and errors go to stderr.
// Exit codes: 0 success, 1 verify found failures, 2 input error, 3 node
// budget exhausted. Every command is deterministic given its argument
// vector, so repeated runs produce byte-identical stdout.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "syncset/automaton.hpp"
#include "syncset/automaton_io.hpp"
#include "syncset/graph.hpp"
#include "syncset/graph_io.hpp"
#include "syncset/reductions.hpp"
#include "syncset/solvers.hpp"
#include "syncset/types.hpp"
#include "syncset/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace syncset;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudgetExhausted = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ParseError(out_path + ": cannot open for writing");
  out << payload;
  if (!out) throw ParseError(out_path + ": write failed");
}

/// Loads an automaton file; a gadget artifact is accepted too (its embedded
/// "automaton" object is used), so gadget output pipes straight back in.
Automaton load_automaton(const std::string& path) {
  const std::string text = read_file(path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw ParseError(path + ": invalid JSON: " + err.what());
  }
  try {
    if (doc.is_object() && doc.contains("automaton")) {
      return automaton_from_json(doc.at("automaton"));
    }
    return automaton_from_json(doc);
  } catch (const ParseError& err) {
    throw ParseError(path + ": " + err.what());
  }
}

Graph load_graph(const std::string& path) {
  try {
    return parse_graph(read_file(path));
  } catch (const ParseError& err) {
    throw ParseError(path + ": " + err.what());
  }
}

std::vector<State> parse_index_list(const std::string& spec) {
  std::vector<State> out;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    std::size_t comma = spec.find(',', pos);
    if (comma == std::string::npos) comma = spec.size();
    const std::string token = spec.substr(pos, comma - pos);
    State value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw ParseError("invalid state index \"" + token + "\" in set spec \"" + spec + "\"");
    }
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

StateSet set_from_spec(std::uint32_t universe, const std::string& spec) {
  StateSet set(universe);
  for (State s : parse_index_list(spec)) {
    if (s >= universe) {
      throw ParseError("state index " + std::to_string(s) + " out of range [0, " +
                       std::to_string(universe) + ")");
    }
    set.insert(s);
  }
  return set;
}

ordered_json witness_json(const SyncWitness& witness, std::uint64_t explored) {
  ordered_json doc;
  doc["set"] = witness.set.members();
  doc["word"] = witness.word;
  doc["target"] = witness.target;
  doc["size"] = witness.set.size();
  doc["explored"] = explored;
  return doc;
}

int cmd_classify(const std::string& file, const std::string& out) {
  const Automaton a = load_automaton(file);
  ordered_json doc;
  doc["unary"] = is_unary(a);
  doc["binary"] = is_binary(a);
  doc["weakly_acyclic"] = is_weakly_acyclic(a);
  doc["synchronizing"] = is_synchronizing(a);
  emit(doc.dump() + "\n", out);
  return kExitOk;
}

int cmd_decide(const std::string& file, const std::string& set_spec, std::uint64_t budget,
               const std::string& out) {
  const Automaton a = load_automaton(file);
  const StateSet set = set_from_spec(a.state_count(), set_spec);
  const DecideResult result = decide_sync_set(a, set, {budget});
  switch (result.outcome) {
    case DecideResult::Outcome::budget_exhausted: {
      std::cerr << "warning: node budget (" << budget << ") exhausted after " << result.explored
                << " subsets\n";
      ordered_json doc;
      doc["status"] = "budget_exhausted";
      doc["explored"] = result.explored;
      emit(doc.dump() + "\n", out);
      return kExitBudgetExhausted;
    }
    case DecideResult::Outcome::not_synchronizing:
      emit("\"no\"\n", out);
      return kExitOk;
    case DecideResult::Outcome::synchronizing:
      emit(witness_json(*result.witness, result.explored).dump() + "\n", out);
      return kExitOk;
  }
  return kExitInputError;  // unreachable
}

int cmd_maxsync(const std::string& file, const std::string& mode, std::uint64_t budget,
                const std::string& out) {
  const Automaton a = load_automaton(file);
  if (mode == "unary") {
    if (!is_unary(a)) {
      std::cerr << "error: --mode unary requires a one-letter automaton (alphabet size is "
                << a.alphabet_size() << ")\n";
      return kExitInputError;
    }
    const MaxSyncResult result = max_sync_set_unary(a);
    emit(witness_json(result.best, result.explored).dump() + "\n", out);
    return kExitOk;
  }
  if (mode == "naive") {
    const MaxSyncResult result = max_sync_set_naive(a);
    emit(witness_json(result.best, result.explored).dump() + "\n", out);
    return kExitOk;
  }
  const MaxSyncOutcome outcome = max_sync_set_exact(a, {budget});
  if (outcome.status == MaxSyncOutcome::Status::budget_exhausted) {
    std::cerr << "warning: node budget (" << budget << ") exhausted after "
              << outcome.result.explored << " subsets; result is a lower bound\n";
    ordered_json doc = witness_json(outcome.result.best, outcome.result.explored);
    doc["status"] = "budget_exhausted";
    emit(doc.dump() + "\n", out);
    return kExitBudgetExhausted;
  }
  emit(witness_json(outcome.result.best, outcome.result.explored).dump() + "\n", out);
  return kExitOk;
}

int cmd_sync_word(const std::string& file, const std::string& out) {
  const Automaton a = load_automaton(file);
  const std::optional<Word> word = find_sync_word(a);
  if (!word) {
    emit("\"no\"\n", out);
    return kExitOk;
  }
  ordered_json doc;
  doc["word"] = *word;
  doc["length"] = word->size();
  emit(doc.dump() + "\n", out);
  return kExitOk;
}

int cmd_gadget(const std::string& kind, const std::string& file, const std::string& set_spec,
               bool prune, const std::string& out) {
  if (kind == "thm1" && set_spec.empty()) {
    std::cerr << "error: gadget thm1 needs --set with the candidate synchronizing set\n";
    return kExitInputError;
  }
  if (kind != "thm1" && !set_spec.empty()) {
    std::cerr << "error: --set only applies to gadget thm1\n";
    return kExitInputError;
  }
  GadgetArtifact artifact = [&]() -> GadgetArtifact {
    if (kind == "thm1") {
      const Automaton a = load_automaton(file);
      return padding_construction(a, set_from_spec(a.state_count(), set_spec));
    }
    const Graph g = load_graph(file);
    if (kind == "thm2") return gadget_weakly_acyclic(g);
    if (kind == "lemma2") return gadget_binary_pre_replication(g);
    if (kind == "thm3") return gadget_binary(g);
    return gadget_binary_weakly_acyclic(g);
  }();
  if (prune) artifact = prune_unreachable(artifact);
  std::cerr << "gadget " << kind << ": " << artifact.automaton.state_count() << " states, "
            << artifact.automaton.alphabet_size() << " letters\n";
  emit(serialize_artifact(artifact), out);
  return kExitOk;
}

int cmd_alpha(const std::string& file, const std::string& out) {
  const Graph g = load_graph(file);
  const IndependentSetResult result = max_independent_set(g);
  ordered_json doc;
  doc["alpha"] = result.size;
  doc["witness"] = result.witness;
  emit(doc.dump() + "\n", out);
  return kExitOk;
}

int cmd_verify(const std::string& kind, const VerifyOptions& options, const std::string& out) {
  const VerifyReport report = run_verify(kind, options);
  std::cerr << "verify " << kind << ": " << report.trials << " instances, "
            << report.failures.size() << " failures, " << report.elapsed_seconds << " s\n";
  emit(serialize_report(report), out);
  return report.ok() ? kExitOk : kExitVerifyFailed;
}

int cmd_random_automaton(std::uint32_t n, std::uint32_t k, std::uint64_t seed,
                         const std::string& out) {
  emit(serialize_automaton(random_automaton(n, k, seed)), out);
  return kExitOk;
}

int cmd_random_graph(std::uint32_t p, double edge_prob, std::uint64_t seed,
                     const std::string& out) {
  emit(serialize_graph_json(random_graph(p, edge_prob, seed)), out);
  return kExitOk;
}

int cmd_export_dot(const std::string& file, bool no_self_loops, const std::string& out) {
  const Automaton a = load_automaton(file);
  emit(export_dot(a, {.include_self_loops = !no_self_loops}), out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Synchronizing-set toolkit: solvers, gadget generators, and a verify harness"};
  app.require_subcommand(1);
  std::string out;  // every subcommand honours --out

  std::string classify_file;
  auto* classify = app.add_subcommand("classify", "Structural flags of an automaton");
  classify->add_option("file", classify_file, "automaton file (JSON)")->required();
  classify->add_option("--out", out, "write stdout payload to this file");

  std::string decide_file, decide_set;
  std::uint64_t decide_budget = kDefaultNodeBudget;
  auto* decide = app.add_subcommand("decide", "Decide whether a state set is synchronizing");
  decide->add_option("file", decide_file, "automaton file (JSON)")->required();
  decide->add_option("set", decide_set, "comma-separated state indices, e.g. 0,4,7")->required();
  decide->add_option("--budget", decide_budget, "node budget for the subset search");
  decide->add_option("--out", out, "write stdout payload to this file");

  std::string maxsync_file, maxsync_mode = "exact";
  std::uint64_t maxsync_budget = kDefaultNodeBudget;
  auto* maxsync = app.add_subcommand("maxsync", "Maximum synchronizing set");
  maxsync->add_option("file", maxsync_file, "automaton file (JSON)")->required();
  maxsync->add_option("--mode", maxsync_mode, "exact | naive | unary")
      ->check(CLI::IsMember({"exact", "naive", "unary"}));
  maxsync->add_option("--budget", maxsync_budget, "node budget (exact mode)");
  maxsync->add_option("--out", out, "write stdout payload to this file");

  std::string sync_word_file;
  auto* sync_word = app.add_subcommand("sync-word", "Synchronizing word for the full state set");
  sync_word->add_option("file", sync_word_file, "automaton file (JSON)")->required();
  sync_word->add_option("--out", out, "write stdout payload to this file");

  std::string gadget_kind, gadget_file, gadget_set;
  bool gadget_prune = false;
  auto* gadget = app.add_subcommand("gadget", "Emit a hardness-construction artifact");
  gadget->add_option("kind", gadget_kind, "thm1 | thm2 | lemma2 | thm3 | thm4")
      ->required()
      ->check(CLI::IsMember({"thm1", "thm2", "lemma2", "thm3", "thm4"}));
  gadget->add_option("file", gadget_file, "graph file (JSON or DIMACS); automaton file for thm1")
      ->required();
  gadget->add_option("--set", gadget_set, "thm1 only: candidate set, comma-separated indices");
  gadget->add_flag("--prune-unreachable", gadget_prune,
                   "restrict to states reachable from the entry states");
  gadget->add_option("--out", out, "write stdout payload to this file");

  std::string alpha_file;
  auto* alpha = app.add_subcommand("alpha", "Maximum independent set of a graph");
  alpha->add_option("file", alpha_file, "graph file (JSON or DIMACS)")->required();
  alpha->add_option("--out", out, "write stdout payload to this file");

  std::string verify_kind;
  VerifyOptions verify_options;
  auto* verify = app.add_subcommand("verify", "Machine-check a construction claim");
  verify->add_option("kind", verify_kind,
                     "thm1 | thm2 | thm3 | lemma2 | thm4 | unary | oracle-equiv")
      ->required()
      ->check(CLI::IsMember({"thm1", "thm2", "thm3", "lemma2", "thm4", "unary", "oracle-equiv"}));
  verify->add_option("--trials", verify_options.trials, "random trials (0 = kind default)");
  verify->add_option("--seed", verify_options.seed, "base seed; trial i uses seed + i");
  verify->add_option("--p", verify_options.max_p, "max graph vertices (0 = kind default)");
  verify->add_option("--n", verify_options.max_n, "max automaton states (0 = kind default)");
  verify->add_option("--k", verify_options.max_k, "max alphabet size (0 = kind default)");
  verify->add_option("--edge-prob", verify_options.edge_probability, "random-graph edge probability")
      ->check(CLI::Range(0.0, 1.0));
  verify->add_option("--budget", verify_options.node_budget, "node budget per solver call");
  verify->add_option("--out", out, "write stdout payload to this file");

  std::uint32_t ra_n = 0, ra_k = 2;
  std::uint64_t ra_seed = 1;
  auto* random_a = app.add_subcommand("random-automaton", "Seeded random automaton");
  random_a->add_option("--n", ra_n, "number of states")->required();
  random_a->add_option("--k", ra_k, "alphabet size");
  random_a->add_option("--seed", ra_seed, "RNG seed");
  random_a->add_option("--out", out, "write stdout payload to this file");

  std::uint32_t rg_p = 0;
  double rg_prob = 0.5;
  std::uint64_t rg_seed = 1;
  auto* random_g = app.add_subcommand("random-graph", "Seeded random graph");
  random_g->add_option("--p", rg_p, "number of vertices")->required();
  random_g->add_option("--edge-prob", rg_prob, "independent edge probability")
      ->check(CLI::Range(0.0, 1.0));
  random_g->add_option("--seed", rg_seed, "RNG seed");
  random_g->add_option("--out", out, "write stdout payload to this file");

  std::string dot_file;
  bool dot_no_self_loops = false;
  auto* export_d = app.add_subcommand("export-dot", "Render an automaton as GraphViz DOT");
  export_d->add_option("file", dot_file, "automaton file (JSON)")->required();
  export_d->add_flag("--no-self-loops", dot_no_self_loops, "leave self-loop edges out");
  export_d->add_option("--out", out, "write stdout payload to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (classify->parsed()) return cmd_classify(classify_file, out);
    if (decide->parsed()) return cmd_decide(decide_file, decide_set, decide_budget, out);
    if (maxsync->parsed()) return cmd_maxsync(maxsync_file, maxsync_mode, maxsync_budget, out);
    if (sync_word->parsed()) return cmd_sync_word(sync_word_file, out);
    if (gadget->parsed()) return cmd_gadget(gadget_kind, gadget_file, gadget_set, gadget_prune, out);
    if (alpha->parsed()) return cmd_alpha(alpha_file, out);
    if (verify->parsed()) return cmd_verify(verify_kind, verify_options, out);
    if (random_a->parsed()) return cmd_random_automaton(ra_n, ra_k, ra_seed, out);
    if (random_g->parsed()) return cmd_random_graph(rg_p, rg_prob, rg_seed, out);
    if (export_d->parsed()) return cmd_export_dot(dot_file, dot_no_self_loops, out);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
