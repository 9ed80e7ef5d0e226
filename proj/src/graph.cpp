#include "syncset/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "syncset/rng.hpp"

namespace syncset {

namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

using Mask = std::uint64_t;

Mask bit(std::uint32_t v) { return Mask{1} << v; }

/// Upper bound on the independent-set size of the candidate subgraph: a
/// greedy partition of `cand` into cliques (every independent set picks at
/// most one vertex per clique).
std::uint32_t clique_cover_bound(const std::vector<Mask>& adj, Mask cand) {
  std::uint32_t cliques = 0;
  while (cand != 0) {
    ++cliques;
    const auto v = static_cast<std::uint32_t>(std::countr_zero(cand));
    Mask pool = cand & adj[v];
    cand &= ~bit(v);
    while (pool != 0) {
      const auto u = static_cast<std::uint32_t>(std::countr_zero(pool));
      cand &= ~bit(u);
      pool &= adj[u] & ~bit(u);
    }
  }
  return cliques;
}

struct BranchAndBound {
  const std::vector<Mask>& adj;
  std::uint32_t best = 0;

  void run(Mask cand, std::uint32_t chosen) {
    if (chosen > best) best = chosen;
    if (cand == 0) return;
    if (chosen + clique_cover_bound(adj, cand) <= best) return;

    // Branch on a maximum-degree vertex of the candidate subgraph; ties go
    // to the smallest index so the search order is deterministic.
    std::uint32_t pick = 0;
    int pick_degree = -1;
    Mask scan = cand;
    while (scan != 0) {
      const auto v = static_cast<std::uint32_t>(std::countr_zero(scan));
      scan &= scan - 1;
      const int degree = std::popcount(adj[v] & cand);
      if (degree > pick_degree) {
        pick_degree = degree;
        pick = v;
      }
    }

    run(cand & ~(adj[pick] | bit(pick)), chosen + 1);  // include
    run(cand & ~bit(pick), chosen);                    // exclude
  }
};

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.vertex_count(), 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= bit(v);
    adj[v] |= bit(u);
  }
  return adj;
}

std::uint32_t alpha_of_mask(const std::vector<Mask>& adj, Mask cand) {
  BranchAndBound solver{adj};
  solver.run(cand, 0);
  return solver.best;
}

std::vector<std::uint32_t> mask_members(Mask m) {
  std::vector<std::uint32_t> out;
  while (m != 0) {
    out.push_back(static_cast<std::uint32_t>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

/// Member-sequence lexicographic order on vertex masks, mirroring
/// lex_less on StateSet.
bool lex_less_mask(Mask a, Mask b) {
  if (a == b) return false;
  const Mask diff = a ^ b;
  const auto i = static_cast<std::uint32_t>(std::countr_zero(diff));
  const Mask above = ~((bit(i) << 1) - 1);
  if ((a & bit(i)) != 0) return (b & above) != 0;
  return (a & above) == 0;
}

}  // namespace

Graph::Graph(std::uint32_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)), adjacency_(vertex_count) {
  require(vertex_count_ >= 1, "graph needs at least one vertex");
  for (auto& [u, v] : edges_) {
    require(u != v, "self-loop " + std::to_string(u) + " not allowed");
    if (u > v) std::swap(u, v);
    require(v < vertex_count_, "edge endpoint " + std::to_string(v) + " out of range [0, " +
                                   std::to_string(vertex_count_) + ")");
  }
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    require(edges_[i] != edges_[i - 1], "duplicate edge (" + std::to_string(edges_[i].first) +
                                            ", " + std::to_string(edges_[i].second) + ")");
  }
  for (const auto& [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

bool Graph::adjacent(std::uint32_t u, std::uint32_t v) const {
  if (u >= vertex_count_ || v >= vertex_count_) {
    throw std::invalid_argument("vertex index out of range");
  }
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

const std::vector<std::uint32_t>& Graph::neighbors(std::uint32_t v) const {
  if (v >= vertex_count_) throw std::invalid_argument("vertex index out of range");
  return adjacency_[v];
}

std::uint32_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& list : adjacency_) best = std::max(best, list.size());
  return static_cast<std::uint32_t>(best);
}

IndependentSetResult max_independent_set(const Graph& g) {
  const std::uint32_t p = g.vertex_count();
  require(p <= 40, "max_independent_set supports at most 40 vertices, got " + std::to_string(p));
  const std::vector<Mask> adj = adjacency_masks(g);
  const Mask all = p == 64 ? ~Mask{0} : (bit(p) - 1);

  const std::uint32_t alpha = alpha_of_mask(adj, all);

  // Rebuild the lexicographically smallest witness greedily: take each
  // vertex in ascending order iff the remaining candidates can still be
  // completed to a maximum independent set.
  Mask chosen = 0;
  Mask avail = all;
  std::uint32_t taken = 0;
  for (std::uint32_t v = 0; v < p && taken < alpha; ++v) {
    if ((avail & bit(v)) == 0) continue;
    const Mask rest = avail & ~(adj[v] | bit(v)) & ~(bit(v) - 1);
    if (taken + 1 + alpha_of_mask(adj, rest) >= alpha) {
      chosen |= bit(v);
      ++taken;
      avail = rest;
    } else {
      avail &= ~bit(v);
    }
  }

  return IndependentSetResult{alpha, mask_members(chosen)};
}

IndependentSetResult max_independent_set_exhaustive(const Graph& g) {
  const std::uint32_t p = g.vertex_count();
  require(p <= 20,
          "max_independent_set_exhaustive supports at most 20 vertices, got " + std::to_string(p));
  const std::vector<Mask> adj = adjacency_masks(g);

  Mask best = 0;
  int best_size = 0;
  for (Mask mask = 0; mask < (Mask{1} << p); ++mask) {
    const int size = std::popcount(mask);
    if (size < best_size) continue;
    bool independent = true;
    for (Mask scan = mask; scan != 0; scan &= scan - 1) {
      const auto v = static_cast<std::uint32_t>(std::countr_zero(scan));
      if ((adj[v] & mask) != 0) {
        independent = false;
        break;
      }
    }
    if (!independent) continue;
    if (size > best_size || (size == best_size && lex_less_mask(mask, best))) {
      best = mask;
      best_size = size;
    }
  }
  return IndependentSetResult{static_cast<std::size_t>(best_size), mask_members(best)};
}

Graph random_graph(std::uint32_t vertex_count, double edge_probability, std::uint64_t seed) {
  require(vertex_count >= 1, "random graph needs at least one vertex");
  require(edge_probability >= 0.0 && edge_probability <= 1.0,
          "edge probability must lie in [0, 1]");
  SplitMix64 rng(seed);
  std::vector<Graph::Edge> edges;
  for (std::uint32_t i = 0; i < vertex_count; ++i) {
    for (std::uint32_t j = i + 1; j < vertex_count; ++j) {
      if (rng.next_unit() < edge_probability) edges.emplace_back(i, j);
    }
  }
  return Graph(vertex_count, std::move(edges));
}

}  // namespace syncset
