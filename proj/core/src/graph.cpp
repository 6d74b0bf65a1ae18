#include "errold/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

#include "errold/errors.hpp"

namespace errold {

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
  if (n < 0) throw ValidationError("negative vertex count");
  Graph g;
  g.n_ = n;
  g.adjacency_.assign(static_cast<std::size_t>(n), VertexSet(n));
  g.degrees_.assign(static_cast<std::size_t>(n), 0);
  g.edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u == e.v) throw ValidationError("self-loop at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v >= n) {
      throw ValidationError("edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
                            " outside 0.." + std::to_string(n - 1));
    }
    auto& row = g.adjacency_[static_cast<std::size_t>(e.u)];
    if (row.contains(e.v)) {
      throw ValidationError("duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    }
    row.insert(e.v);
    g.adjacency_[static_cast<std::size_t>(e.v)].insert(e.u);
    ++g.degrees_[static_cast<std::size_t>(e.u)];
    ++g.degrees_[static_cast<std::size_t>(e.v)];
    g.edges_.push_back(e);
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  return g;
}

VertexSet Graph::closed_neighbors(int v) const {
  VertexSet s = neighbors(v);
  s.insert(v);
  return s;
}

Graph Graph::permuted(const std::vector<int>& perm) const {
  std::vector<Edge> relabeled;
  relabeled.reserve(edges_.size());
  for (const Edge& e : edges_) {
    relabeled.emplace_back(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
  }
  return from_edges(n_, relabeled);
}

DegreeSummary degree_summary(const Graph& g) {
  DegreeSummary s;
  if (g.n() == 0) return s;
  s.min_degree = g.degree(0);
  s.max_degree = g.degree(0);
  int threes = 0;
  int fours = 0;
  for (int v = 0; v < g.n(); ++v) {
    const int d = g.degree(v);
    s.min_degree = std::min(s.min_degree, d);
    s.max_degree = std::max(s.max_degree, d);
    threes += d == 3;
    fours += d == 4;
  }
  s.cubic = threes == g.n();
  s.quasi_cubic = fours == 1 && threes == g.n() - 1;
  return s;
}

std::vector<FourCycle> four_cycles(const Graph& g) {
  // A cycle's least vertex a fixes its opposite corner c; the two remaining
  // corners are a pair of common neighbours of a and c, both above a.
  std::vector<FourCycle> out;
  for (int a = 0; a < g.n(); ++a) {
    for (int c = a + 1; c < g.n(); ++c) {
      VertexSet common = g.neighbors(a) & g.neighbors(c);
      std::vector<int> mids;
      for (int w : common) {
        if (w > a) mids.push_back(w);
      }
      for (std::size_t i = 0; i < mids.size(); ++i) {
        for (std::size_t j = i + 1; j < mids.size(); ++j) out.push_back({a, mids[i], c, mids[j]});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_c4_free(const Graph& g) {
  for (int a = 0; a < g.n(); ++a) {
    for (int c = a + 1; c < g.n(); ++c) {
      if (VertexSet::count_and(g.neighbors(a), g.neighbors(c)) >= 2) return false;
    }
  }
  return true;
}

std::vector<TwinPair> twin_pairs(const Graph& g) {
  std::vector<TwinPair> out;
  for (int u = 0; u < g.n(); ++u) {
    for (int v = u + 1; v < g.n(); ++v) {
      if (g.neighbors(u) == g.neighbors(v)) {
        out.push_back({u, v, TwinKind::open});
      } else if (g.has_edge(u, v) && g.closed_neighbors(u) == g.closed_neighbors(v)) {
        out.push_back({u, v, TwinKind::closed});
      }
    }
  }
  return out;
}

VertexSet within_distance_two(const Graph& g, int v) {
  VertexSet reach = g.neighbors(v);
  for (int w : g.neighbors(v)) reach |= g.neighbors(w);
  reach.erase(v);
  return reach;
}

std::vector<Edge> pairs_within_distance_two(const Graph& g) {
  std::vector<Edge> out;
  for (int u = 0; u < g.n(); ++u) {
    const VertexSet reach = within_distance_two(g, u);
    for (int v = reach.next(u); v != -1; v = reach.next(v)) out.emplace_back(u, v);
  }
  return out;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(static_cast<std::size_t>(g.n()), -1);
  std::deque<int> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(u)) {
      if (dist[static_cast<std::size_t>(w)] == -1) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

namespace {

void require_edge(const Graph& g, Edge e) {
  if (e.u < 0 || e.v >= g.n() || e.u == e.v || !g.has_edge(e.u, e.v)) {
    throw std::invalid_argument("{" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                "} is not an edge");
  }
}

}  // namespace

bool edge_in_triangle(const Graph& g, Edge e) {
  require_edge(g, e);
  return VertexSet::count_and(g.neighbors(e.u), g.neighbors(e.v)) > 0;
}

bool edges_are_p5_terminal(const Graph& g, Edge e1, Edge e2) {
  require_edge(g, e1);
  require_edge(g, e2);
  if (e1.u == e2.u || e1.u == e2.v || e1.v == e2.u || e1.v == e2.v) {
    throw std::invalid_argument("edges share an endpoint");
  }
  VertexSet ends(g.n(), {e1.u, e1.v, e2.u, e2.v});
  // Path t1-s1-mid-s2-t2 with {s1,t1} = e1 and {s2,t2} = e2.
  for (int s1 : {e1.u, e1.v}) {
    for (int s2 : {e2.u, e2.v}) {
      VertexSet mids = (g.neighbors(s1) & g.neighbors(s2)) - ends;
      if (!mids.empty()) return true;
    }
  }
  return false;
}

}  // namespace errold
