#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "errold/graph.hpp"
#include "errold/vertex_set.hpp"

namespace errold::testing {

inline std::string data_path(const std::string& rel) { return std::string(ERROLD_DATA_DIR) + "/" + rel; }

// G(n, p) with a fixed generator.
inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

inline VertexSet random_subset(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  VertexSet s(n);
  for (int v = 0; v < n; ++v) {
    if (coin(rng)) s.insert(v);
  }
  return s;
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

// Graph on n vertices whose edges are the set bits of `mask` over the
// pairs (0,1), (0,2), ..., (n-2,n-1).
inline Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<Edge> edges;
  int bit = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v, ++bit) {
      if ((mask >> bit) & 1U) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

// Plain adjacency-matrix helpers, independent of the library's bitsets.
inline std::vector<std::vector<bool>> adjacency_matrix(const Graph& g) {
  std::vector<std::vector<bool>> a(static_cast<std::size_t>(g.n()), std::vector<bool>(static_cast<std::size_t>(g.n())));
  for (const Edge& e : g.edges()) {
    a[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = true;
    a[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = true;
  }
  return a;
}

inline std::set<int> neighbour_set(const Graph& g, int v) {
  std::set<int> out;
  for (const Edge& e : g.edges()) {
    if (e.u == v) out.insert(e.v);
    if (e.v == v) out.insert(e.u);
  }
  return out;
}

}  // namespace errold::testing
