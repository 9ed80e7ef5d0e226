#include <string>

#include "doctest.h"
#include "fixtures.hpp"
#include "json.hpp"
#include "syncset/automaton_io.hpp"
#include "syncset/reductions.hpp"
#include "syncset/types.hpp"

using namespace syncset;

namespace {

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size())) {
    ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("parse_automaton reads the wire format") {
  const Automaton a = parse_automaton(R"({"states":2,"alphabet":1,"delta":[[1],[1]]})");
  CHECK(a == fixtures::funnel2());
  CHECK_FALSE(a.labels().has_value());
}

TEST_CASE("parse_automaton reports located errors") {
  CHECK_THROWS_WITH_AS(parse_automaton(R"({"states":2,"alphabet":1,"delta":[[2],[1]]})"),
                       doctest::Contains("delta[0][0]"), ParseError);
  CHECK_THROWS_WITH_AS(parse_automaton(R"({"states":2,"alphabet":1,"delta":[[1]]})"),
                       doctest::Contains("delta"), ParseError);
  CHECK_THROWS_WITH_AS(parse_automaton(R"({"alphabet":1,"delta":[[0]]})"),
                       doctest::Contains("states"), ParseError);
  CHECK_THROWS_WITH_AS(parse_automaton("{not json"), doctest::Contains("invalid JSON"),
                       ParseError);
  CHECK_THROWS_WITH_AS(
      parse_automaton(R"({"states":1,"alphabet":1,"delta":[[0]],"labels":["a","b"]})"),
      doctest::Contains("labels"), ParseError);
}

TEST_CASE("serialize round-trips and is byte-deterministic") {
  const Automaton a1 = fixtures::example_a1();
  const std::string text = serialize_automaton(a1);
  CHECK(text.back() == '\n');
  CHECK(parse_automaton(text) == a1);
  CHECK(serialize_automaton(a1) == text);

  // Labels survive the round trip.
  Automaton::Builder builder(2, 1);
  builder.set(0, 0, 1);
  builder.label(0, "start");
  builder.label(1, "end");
  const Automaton labelled = builder.build();
  CHECK(parse_automaton(serialize_automaton(labelled)) == labelled);

  const nlohmann::ordered_json doc = automaton_to_json(labelled);
  CHECK(doc.at("states") == 2);
  CHECK(doc.at("alphabet") == 1);
  CHECK(doc.at("labels").size() == 2);
}

TEST_CASE("export_dot renders nodes and merged edges") {
  const Automaton self_loop(1, 1, {0});

  const std::string with_loops = export_dot(self_loop);
  CHECK(count_occurrences(with_loops, "->") == 1);
  CHECK(count_occurrences(with_loops, "[label=\"0\"]") == 2);  // node label + edge label

  const std::string without = export_dot(self_loop, {.include_self_loops = false});
  CHECK(count_occurrences(without, "->") == 0);
  CHECK(count_occurrences(without, "q0 [label=") == 1);  // node still present

  // Both letters of a binary funnel merge into one labelled edge.
  const Automaton both(2, 2, {1, 1, 1, 1});
  const std::string merged = export_dot(both, {.include_self_loops = false});
  CHECK(count_occurrences(merged, "->") == 1);
  CHECK(count_occurrences(merged, "\"0,1\"") == 1);
}

TEST_CASE("export_dot of the pruned layered example shows 17 states") {
  // From the first layer, 9 v-states, 5 of the 9 u-states, f and the two
  // cycle states are reachable: 17 in total. The rendering drops self-loops
  // but keeps every node.
  const GadgetArtifact pruned = prune_unreachable(gadget_binary_pre_replication(fixtures::example_graph()));
  CHECK(pruned.automaton.state_count() == 17);

  const std::string dot = export_dot(pruned.automaton, {.include_self_loops = false});
  std::size_t node_lines = 0;
  for (State q = 0; q < pruned.automaton.state_count(); ++q) {
    // Anchor at line starts so edge lines ("qA -> qB [label=...") don't count.
    node_lines += count_occurrences(dot, "\n  q" + std::to_string(q) + " [label=");
  }
  CHECK(node_lines == 17);
}

TEST_CASE("export_dot escapes label text") {
  Automaton::Builder builder(1, 1);
  builder.label(0, "say \"hi\"\\now");
  const std::string dot = export_dot(builder.build());
  CHECK(dot.find("\\\"hi\\\"") != std::string::npos);
  CHECK(dot.find("\\\\now") != std::string::npos);
}
