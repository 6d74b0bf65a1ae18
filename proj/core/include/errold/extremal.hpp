#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "errold/canonical.hpp"
#include "errold/graph.hpp"

namespace errold {

using GraphPredicate = std::function<bool(const Graph&)>;

// Labeled search space for enumerate_graphs. Only labelings with
// non-increasing degrees are generated; every isomorphism class has one.
struct EnumerationQuery {
  int n = 0;
  std::optional<int> edge_count;
  int min_degree = 0;
  std::optional<int> max_degree;
  // Reject partial graphs as soon as two finished vertices share two
  // neighbours but differ in fewer than three. Sound only when the predicate
  // implies ERR:OLD existence.
  bool prune_err_old = false;
  int jobs = 1;
};

// Pairwise non-isomorphic graphs satisfying the query and `predicate`,
// sorted by canonical code ascending. The predicate must be invariant under
// relabeling. Throws ResourceError when n > kMaxCanonicalVertices.
std::vector<CanonicalGraph> enumerate_graphs(const EnumerationQuery& query,
                                             const GraphPredicate& predicate);
std::vector<CanonicalGraph> enumerate_graphs(int n, std::optional<int> edge_count,
                                             const GraphPredicate& predicate, int jobs = 1);

bool has_err_old(const Graph& g);

std::vector<CanonicalGraph> cubic_graphs(int n, int jobs = 1);
std::vector<CanonicalGraph> quasi_cubic_graphs(int n, int jobs = 1);

// Cubic graphs on n+2 vertices reachable from `base` (all on n vertices) by
// one edge insertion: subdivide two distinct edges and join the two new
// vertices. Deduplicated up to isomorphism and sorted by wide canonical code.
std::vector<Graph> cubic_edge_insertions(const std::vector<Graph>& base);

// Cubic graphs on n+2 vertices obtained by replacing one vertex of a graph in
// `base` with a triangle. Deduplicated and sorted like cubic_edge_insertions.
std::vector<Graph> cubic_vertex_truncations(const std::vector<Graph>& base);

// Cubic graphs on n+4 vertices obtained by replacing one edge uv of a graph
// in `base` with a path u - diamond - v (K4 minus an edge, entered at its two
// degree-2 vertices).
std::vector<Graph> cubic_diamond_insertions(const std::vector<Graph>& base);

// Connected cubic graphs on n vertices, one per isomorphism class found. Up to
// kMaxCanonicalVertices this is the exact enumeration; larger sizes are grown
// from the two previous levels by edge insertion, vertex truncation and
// diamond insertion. Edge insertion alone misses graphs with no reducible
// edge, such as the truncated tetrahedron (n = 12). Requires even
// 4 <= n <= 16.
std::vector<Graph> connected_cubic_graphs(int n);

bool is_connected(const Graph& g);

struct SupportingEdgeCount {
  int edge_count = 0;
  std::vector<CanonicalGraph> graphs;
};

// Least m such that some n-vertex graph with m edges permits an ERR:OLD set,
// with every such graph up to isomorphism. Requires 7 <= n <= 10.
SupportingEdgeCount smallest_supporting_edge_count(int n, int jobs = 1);

// Deletes ab and cd and adds vertex n adjacent to a, b, c, d. Throws
// std::invalid_argument naming the failed precondition: g cubic with an
// ERR:OLD set, both edges present and vertex-disjoint, neither in a
// triangle, and not the terminal edges of a P5.
Graph quasi_cubic_expand(const Graph& g, Edge ab, Edge cd);

// Lexicographically first edge pair accepted by quasi_cubic_expand.
std::optional<std::pair<Edge, Edge>> first_expandable_pair(const Graph& g);

}  // namespace errold
