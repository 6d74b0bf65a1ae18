#include "errold/named_graphs.hpp"

#include <vector>

namespace errold::named {

Graph complete(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

Graph cycle(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph path(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

Graph petersen() {
  // Outer 5-cycle 0..4, spokes to 5..9, inner pentagram.
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph::from_edges(10, edges);
}

Graph heawood() {
  // Points 0..6, lines 7..13; line i is {i, i+1, i+3} mod 7.
  std::vector<Edge> edges;
  for (int line = 0; line < 7; ++line) {
    for (int shift : {0, 1, 3}) edges.emplace_back((line + shift) % 7, 7 + line);
  }
  return Graph::from_edges(14, edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges()) edges.emplace_back(e.u + a.n(), e.v + a.n());
  return Graph::from_edges(a.n() + b.n(), edges);
}

}  // namespace errold::named
