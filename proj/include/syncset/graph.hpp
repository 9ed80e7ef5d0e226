#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace syncset {

/// Simple undirected graph on vertices [0, p): no self-loops, no parallel
/// edges. Edges are normalized to (low, high) and kept sorted so equal
/// graphs compare equal structurally.
class Graph {
public:
  using Edge = std::pair<std::uint32_t, std::uint32_t>;

  Graph(std::uint32_t vertex_count, std::vector<Edge> edges);

  std::uint32_t vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  bool adjacent(std::uint32_t u, std::uint32_t v) const;
  const std::vector<std::uint32_t>& neighbors(std::uint32_t v) const;
  std::uint32_t max_degree() const;

  bool operator==(const Graph& other) const = default;

private:
  std::uint32_t vertex_count_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::uint32_t>> adjacency_;  // sorted neighbour lists
};

struct IndependentSetResult {
  std::size_t size = 0;
  std::vector<std::uint32_t> witness;  // ascending vertex indices
};

/// Exact maximum independent set for p <= 40 (enforced). Branch and bound:
/// branch on a maximum-degree vertex of the candidate subgraph, bound by a
/// greedy clique cover. The witness is the lexicographically smallest
/// maximum independent set under vertex-index order.
IndependentSetResult max_independent_set(const Graph& g);

/// 2^p reference enumeration for cross-checking the branch-and-bound solver;
/// p <= 20 enforced. Returns the same (size, lexicographically smallest
/// witness) contract.
IndependentSetResult max_independent_set_exhaustive(const Graph& g);

/// Erdos-Renyi style sample: every unordered pair (i < j), visited in
/// lexicographic order, is included independently with the given
/// probability. Equal seeds give equal graphs on every platform.
Graph random_graph(std::uint32_t vertex_count, double edge_probability, std::uint64_t seed);

}  // namespace syncset
