#pragma once

#include <array>
#include <compare>
#include <vector>

#include "errold/vertex_set.hpp"

namespace errold {

// Unordered vertex pair, always stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Finite simple undirected graph on vertices 0..n-1. Immutable once built;
// adjacency is held as one bitset row per vertex.
class Graph {
 public:
  Graph() = default;

  // Throws ValidationError on self-loops, duplicate edges, or endpoints
  // outside 0..n-1.
  static Graph from_edges(int n, const std::vector<Edge>& edges);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }

  int degree(int v) const { return degrees_[static_cast<std::size_t>(v)]; }
  const VertexSet& neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  VertexSet closed_neighbors(int v) const;
  bool has_edge(int u, int v) const { return neighbors(u).contains(v); }

  // Sorted ascending by (u, v).
  const std::vector<Edge>& edges() const { return edges_; }

  VertexSet all_vertices() const { return VertexSet::full(n_); }
  VertexSet empty_set() const { return VertexSet(n_); }

  // Relabels vertex v as perm[v].
  Graph permuted(const std::vector<int>& perm) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  int n_ = 0;
  std::vector<VertexSet> adjacency_;
  std::vector<int> degrees_;
  std::vector<Edge> edges_;
};

struct DegreeSummary {
  int min_degree = 0;
  int max_degree = 0;
  bool cubic = false;
  bool quasi_cubic = false;
};

DegreeSummary degree_summary(const Graph& g);

// A 4-cycle a-b-c-d-a in canonical form: a is the least vertex and b < d,
// which is the lexicographically least rotation/reflection.
using FourCycle = std::array<int, 4>;

// Every 4-cycle subgraph exactly once, sorted ascending.
std::vector<FourCycle> four_cycles(const Graph& g);
bool is_c4_free(const Graph& g);

enum class TwinKind { open, closed };

struct TwinPair {
  int u = 0;
  int v = 0;
  TwinKind kind = TwinKind::open;

  friend bool operator==(const TwinPair&, const TwinPair&) = default;
};

std::vector<TwinPair> twin_pairs(const Graph& g);

// Vertices at distance 1 or 2 from v.
VertexSet within_distance_two(const Graph& g, int v);

// Unordered pairs u < v at distance <= 2, sorted.
std::vector<Edge> pairs_within_distance_two(const Graph& g);

// BFS distances from `source`; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int source);

// Throws std::invalid_argument when e is not an edge of g.
bool edge_in_triangle(const Graph& g, Edge e);

// True when some path on five distinct vertices has e1 and e2 as its first
// and last edges. Throws std::invalid_argument when either is not an edge or
// the two edges share an endpoint.
bool edges_are_p5_terminal(const Graph& g, Edge e1, Edge e2);

}  // namespace errold
