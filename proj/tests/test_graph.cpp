#include <cstdint>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "syncset/graph.hpp"
#include "syncset/graph_io.hpp"
#include "syncset/rng.hpp"
#include "syncset/types.hpp"

using namespace syncset;

TEST_CASE("Graph validates and normalizes edges") {
  const Graph g(4, {{2, 0}, {1, 3}});
  CHECK(g.vertex_count() == 4);
  CHECK(g.adjacent(0, 2));
  CHECK(g.adjacent(2, 0));
  CHECK_FALSE(g.adjacent(0, 1));
  CHECK(g.edges() == std::vector<Graph::Edge>{{0, 2}, {1, 3}});  // sorted, low endpoint first
  CHECK(g.neighbors(3) == std::vector<std::uint32_t>{1});
  CHECK(g.max_degree() == 1);

  CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);          // self-loop
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);  // duplicate
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);          // out of range
}

TEST_CASE("max_independent_set on small knowns") {
  const auto empty5 = max_independent_set(Graph(5, {}));
  CHECK(empty5.size == 5);
  CHECK(empty5.witness == std::vector<std::uint32_t>{0, 1, 2, 3, 4});

  const auto k3 = max_independent_set(Graph(3, {{0, 1}, {0, 2}, {1, 2}}));
  CHECK(k3.size == 1);
  CHECK(k3.witness == std::vector<std::uint32_t>{0});  // lexicographically smallest maximum

  const auto example = max_independent_set(fixtures::example_graph());
  CHECK(example.size == 2);
  CHECK(example.witness == std::vector<std::uint32_t>{0, 1});

  // Path 0-1-2-3: alpha = 2, smallest witness {0, 2}.
  const auto path4 = max_independent_set(Graph(4, {{0, 1}, {1, 2}, {2, 3}}));
  CHECK(path4.size == 2);
  CHECK(path4.witness == std::vector<std::uint32_t>{0, 2});
}

TEST_CASE("max_independent_set enforces its size limit") {
  CHECK_THROWS_AS(max_independent_set(Graph(41, {})), std::invalid_argument);
  CHECK_THROWS_AS(max_independent_set_exhaustive(Graph(21, {})), std::invalid_argument);
  CHECK_NOTHROW(max_independent_set(Graph(40, {})));
}

TEST_CASE("branch and bound matches exhaustive enumeration") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    SplitMix64 rng(seed);
    const auto p = static_cast<std::uint32_t>(1 + rng.next_below(12));
    const double prob = static_cast<double>(rng.next_below(101)) / 100.0;
    const Graph g = random_graph(p, prob, rng.next());

    const IndependentSetResult fast = max_independent_set(g);
    const IndependentSetResult slow = max_independent_set_exhaustive(g);
    REQUIRE(fast.size == slow.size);
    REQUIRE(fast.witness == slow.witness);  // same lexicographic tie-break

    // The witness really is independent and of the reported size.
    CHECK(fast.witness.size() == fast.size);
    for (std::size_t i = 0; i < fast.witness.size(); ++i) {
      for (std::size_t j = i + 1; j < fast.witness.size(); ++j) {
        CHECK_FALSE(g.adjacent(fast.witness[i], fast.witness[j]));
      }
    }

    // Sanity floors (additive form avoids unsigned underflow on dense graphs).
    CHECK(fast.size + g.edge_count() >= g.vertex_count());
    CHECK(fast.size * (1 + g.max_degree()) >= g.vertex_count());
  }
}

TEST_CASE("random_graph extremes and determinism") {
  CHECK(random_graph(5, 0.0, 3).edges().empty());
  CHECK(random_graph(5, 1.0, 3).edges().size() == 10);  // complete graph
  CHECK(random_graph(6, 0.5, 11) == random_graph(6, 0.5, 11));
  CHECK(random_graph(1, 1.0, 1).edges().empty());
}

TEST_CASE("graph JSON round-trip") {
  const Graph g = fixtures::example_graph();
  const std::string text = serialize_graph_json(g);
  CHECK(parse_graph_json(text) == g);
  CHECK(serialize_graph_json(g) == text);

  CHECK_THROWS_WITH_AS(parse_graph_json(R"({"vertices":2,"edges":[[0,2]]})"),
                       doctest::Contains("edges[0]"), ParseError);
  CHECK_THROWS_WITH_AS(parse_graph_json("[1,2]"), doctest::Contains("object"), ParseError);
}

TEST_CASE("graph DIMACS round-trip") {
  const Graph triangle(3, {{0, 1}, {0, 2}, {1, 2}});
  const std::string dimacs = "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n";
  CHECK(parse_graph_dimacs(dimacs) == triangle);
  CHECK(parse_graph_dimacs(serialize_graph_dimacs(triangle)) == triangle);

  // Comments are allowed; both formats agree on the parsed graph.
  CHECK(parse_graph_dimacs("c a triangle\n" + dimacs) == triangle);
  CHECK(parse_graph_json(serialize_graph_json(triangle)) == parse_graph_dimacs(dimacs));

  const Graph empty(4, {});
  CHECK(parse_graph_dimacs(serialize_graph_dimacs(empty)) == empty);
}

TEST_CASE("graph DIMACS reports located errors") {
  CHECK_THROWS_WITH_AS(parse_graph_dimacs("p edge 2 1\ne 1 1\n"), doctest::Contains("line 2"),
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_graph_dimacs("e 1 2\n"), doctest::Contains("problem line"),
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_graph_dimacs("p edge 2 2\ne 1 2\n"),
                       doctest::Contains("declares 2 edges"), ParseError);
  CHECK_THROWS_WITH_AS(parse_graph_dimacs("p edge 2 1\ne 0 1\n"), doctest::Contains("line 2"),
                       ParseError);
}

TEST_CASE("parse_graph sniffs the format") {
  const Graph g = fixtures::example_graph();
  CHECK(parse_graph(serialize_graph_json(g)) == g);
  CHECK(parse_graph(serialize_graph_dimacs(g)) == g);
  CHECK_THROWS_AS(parse_graph(""), ParseError);
}
