#include <stdexcept>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "syncset/verify.hpp"

using namespace syncset;

TEST_CASE("all_graphs enumerates every labelled graph") {
  CHECK(all_graphs(1).size() == 1);
  CHECK(all_graphs(2).size() == 2);
  CHECK(all_graphs(3).size() == 8);
  CHECK(all_graphs(4).size() == 64);
  CHECK_THROWS_AS(all_graphs(7), std::invalid_argument);

  // Mask order: the empty graph first, the complete graph last.
  const auto graphs = all_graphs(3);
  CHECK(graphs.front().edge_count() == 0);
  CHECK(graphs.back().edge_count() == 3);
}

TEST_CASE("run_verify happy paths on small batteries") {
  SUBCASE("thm2 counts the exhaustive sweep plus the random trials") {
    VerifyOptions options;
    options.trials = 5;
    options.max_p = 3;
    const VerifyReport report = run_verify("thm2", options);
    CHECK(report.kind == "thm2");
    CHECK(report.ok());
    CHECK(report.trials == 16);  // 1 + 2 + 8 exhaustive, then 5 random
    CHECK(report.elapsed_seconds >= 0.0);
  }

  SUBCASE("lemma2 is exhaustive over two-vertex graphs") {
    VerifyOptions options;
    options.max_p = 2;
    const VerifyReport report = run_verify("lemma2", options);
    CHECK(report.ok());
    CHECK(report.trials == 2);
  }

  SUBCASE("thm3 skips the graphs outside the claim") {
    VerifyOptions options;
    options.max_p = 2;
    const VerifyReport report = run_verify("thm3", options);
    CHECK(report.ok());
    CHECK(report.trials == 1);  // K2 has alpha 1 and is skipped
  }

  SUBCASE("thm4 covers all two-vertex graphs") {
    VerifyOptions options;
    options.max_p = 2;
    const VerifyReport report = run_verify("thm4", options);
    CHECK(report.ok());
    CHECK(report.trials == 2);
  }

  SUBCASE("thm1 round-trips decisions through the padding") {
    VerifyOptions options;
    options.trials = 25;
    options.max_n = 4;
    const VerifyReport report = run_verify("thm1", options);
    CHECK(report.ok());
    CHECK(report.trials == 25);
  }

  SUBCASE("unary agrees with the oracle") {
    VerifyOptions options;
    options.trials = 30;
    options.max_n = 8;
    const VerifyReport report = run_verify("unary", options);
    CHECK(report.ok());
    CHECK(report.trials == 30);
  }

  SUBCASE("oracle equivalence") {
    VerifyOptions options;
    options.trials = 30;
    options.max_n = 6;
    options.max_k = 2;
    const VerifyReport report = run_verify("oracle-equiv", options);
    CHECK(report.ok());
    CHECK(report.trials == 30);
  }
}

TEST_CASE("run_verify input validation") {
  CHECK_THROWS_WITH_AS(run_verify("thm5"), doctest::Contains("unknown verify kind"),
                       std::invalid_argument);

  VerifyOptions options;
  options.max_n = 14;  // past the naive oracle's range
  CHECK_THROWS_AS(run_verify("unary", options), std::invalid_argument);
  CHECK_THROWS_AS(run_verify("oracle-equiv", options), std::invalid_argument);
}

TEST_CASE("verification is deterministic for a fixed seed") {
  VerifyOptions options;
  options.trials = 10;
  options.max_n = 4;
  options.seed = 7;
  const std::string first = serialize_report(run_verify("thm1", options));
  const std::string second = serialize_report(run_verify("thm1", options));
  CHECK(first == second);
}

TEST_CASE("serialize_report wire format") {
  SUBCASE("clean report") {
    VerifyReport report;
    report.kind = "thm2";
    report.trials = 3;
    report.elapsed_seconds = 1.5;  // must not appear in the output
    CHECK(serialize_report(report) == "{\"kind\":\"thm2\",\"trials\":3,\"failures\":[],\"ok\":true}\n");
  }

  SUBCASE("failures carry the reproduction data") {
    VerifyReport report;
    report.kind = "unary";
    report.trials = 2;
    report.failures.push_back({42, "n=3", "size 2", "size 1"});
    const auto doc = nlohmann::json::parse(serialize_report(report));
    CHECK(doc.at("ok") == false);
    CHECK(doc.at("failures").size() == 1);
    CHECK(doc.at("failures").at(0).at("seed") == 42);
    CHECK(doc.at("failures").at(0).at("instance") == "n=3");
    CHECK(doc.at("failures").at(0).at("expected") == "size 2");
    CHECK(doc.at("failures").at(0).at("actual") == "size 1");
  }
}
