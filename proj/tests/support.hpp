#pragma once

// Test-only helpers: random graphs and brute-force oracles that share no code
// with the engine beyond the Graph adjacency queries.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "romancrit/graph.hpp"

namespace romancrit::testing {

inline Graph random_graph(std::mt19937_64& rng, unsigned n, double p = 0.5) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  return Graph(n, edges);
}

/// Random order in [lo, hi] and random density.
inline Graph random_graph_between(std::mt19937_64& rng, unsigned lo, unsigned hi) {
  std::uniform_int_distribution<unsigned> order(lo, hi);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  const unsigned n = order(rng);
  return random_graph(rng, n, density(rng));
}

inline std::vector<std::vector<bool>> adjacency_matrix(const Graph& g) {
  std::vector<std::vector<bool>> m(g.order(), std::vector<bool>(g.order(), false));
  for (const Edge& e : g.edges()) m[e.u][e.v] = m[e.v][e.u] = true;
  return m;
}

/// Minimum Roman weight by recursion over every labeling, checking each
/// 0-vertex against an adjacency matrix.
inline unsigned brute_gamma(const Graph& g) {
  const unsigned n = g.order();
  const auto adj = adjacency_matrix(g);
  std::vector<int> label(n, 0);
  unsigned best = 2 * n + 1;
  auto roman = [&] {
    for (unsigned v = 0; v < n; ++v) {
      if (label[v] != 0) continue;
      bool defended = false;
      for (unsigned u = 0; u < n && !defended; ++u) defended = adj[v][u] && label[u] == 2;
      if (!defended) return false;
    }
    return true;
  };
  auto recurse = [&](auto&& self, unsigned v) -> void {
    if (v == n) {
      if (roman()) best = std::min<unsigned>(best, std::accumulate(label.begin(), label.end(), 0u));
      return;
    }
    for (int l = 0; l <= 2; ++l) {
      label[v] = l;
      self(self, v + 1);
    }
  };
  recurse(recurse, 0);
  return best;
}

/// All minimum-weight labelings, each encoded base 3 with vertex 0 least significant.
inline std::vector<std::vector<int>> brute_minimum_labelings(const Graph& g) {
  const unsigned n = g.order();
  const auto adj = adjacency_matrix(g);
  const unsigned gamma = brute_gamma(g);
  std::vector<std::vector<int>> out;
  std::vector<int> label(n, 0);
  auto recurse = [&](auto&& self, unsigned v) -> void {
    if (v == n) {
      unsigned w = 0;
      for (int l : label) w += l;
      if (w != gamma) return;
      for (unsigned x = 0; x < n; ++x) {
        if (label[x] != 0) continue;
        bool defended = false;
        for (unsigned u = 0; u < n && !defended; ++u) defended = adj[x][u] && label[u] == 2;
        if (!defended) return;
      }
      out.push_back(label);
      return;
    }
    for (int l = 0; l <= 2; ++l) {
      label[v] = l;
      self(self, v + 1);
    }
  };
  recurse(recurse, 0);
  return out;
}

/// Isomorphism by trying every permutation.
inline bool brute_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order()) return false;
  std::vector<unsigned> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0u);
  do {
    bool ok = true;
    for (unsigned u = 0; u < g.order() && ok; ++u)
      for (unsigned v = u + 1; v < g.order() && ok; ++v)
        ok = g.adjacent(u, v) == h.adjacent(perm[u], perm[v]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline Graph relabel(const Graph& g, const std::vector<unsigned>& perm) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
  return Graph(g.order(), edges);
}

inline std::vector<unsigned> sorted_degrees(const Graph& g) {
  auto d = g.degrees();
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace romancrit::testing
