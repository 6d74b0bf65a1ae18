#include "errold/extremal.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "errold/detection.hpp"
#include "errold/errors.hpp"
#include "errold/named_graphs.hpp"

namespace errold {
namespace {

using Row = std::uint16_t;

// Row-by-row labeled generator. Row u picks u's neighbours among u+1..n-1;
// once it is chosen, rows 0..u are final.
// With m edges and every degree >= d, no vertex exceeds 2m - (n-1)d.
int implied_max_degree(const EnumerationQuery& q) {
  int bound = q.max_degree.value_or(q.n - 1);
  if (q.edge_count && q.n > 0) bound = std::min(bound, 2 * *q.edge_count - (q.n - 1) * q.min_degree);
  return bound;
}

class LabeledGenerator {
 public:
  LabeledGenerator(const EnumerationQuery& q, const GraphPredicate& predicate)
      : q_(q),
        predicate_(predicate),
        max_degree_(implied_max_degree(q)),
        breadth_first_(max_degree_ == q.min_degree) {}

  // Candidate neighbour sets of vertex 0, in ascending mask order.
  std::vector<Row> first_rows() const {
    std::vector<Row> out;
    if (q_.n == 0) return out;
    const Row all = static_cast<Row>(((1U << q_.n) - 1) & ~1U);
    for (unsigned mask = all;; mask = (mask - 1) & all) {
      out.push_back(static_cast<Row>(mask));
      if (mask == 0) break;
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

  void run_from(Row first_row, std::map<std::uint64_t, CanonicalGraph>& found) {
    found_ = &found;
    rows_.fill(0);
    degrees_.fill(0);
    if (q_.n == 1) {
      emit();
      return;
    }
    try_row(0, first_row, 0, 1);
  }

  void run_trivial(std::map<std::uint64_t, CanonicalGraph>& found) {
    found_ = &found;
    emit();
  }

 private:
  // `discovered` counts the labels already reached when row u is chosen.
  void try_row(int u, Row added, int edges, int discovered) {
    const int n = q_.n;
    if (breadth_first_) {
      // Regular queries: the degree order says nothing, so use a
      // breadth-first labeling instead. Newly reached neighbours of u take
      // the next free labels, in order.
      discovered = std::max(discovered, u + 1);
      const unsigned fresh = static_cast<unsigned>(added) >> discovered;
      if ((fresh & (fresh + 1)) != 0) return;
      discovered += std::popcount(fresh);
    }
    const int added_count = std::popcount(added);
    const int deg_u = degrees_[static_cast<std::size_t>(u)] + added_count;
    if (deg_u < q_.min_degree || deg_u > max_degree_) return;
    if (u > 0 && deg_u > degrees_[static_cast<std::size_t>(u - 1)]) return;
    const int total = edges + added_count;
    if (q_.edge_count && total > *q_.edge_count) return;
    for (int v = u + 1; v < n; ++v) {
      const int dv = degrees_[static_cast<std::size_t>(v)] + ((added >> v) & 1U);
      if (dv > deg_u) return;
      if (dv + (n - u - 2) < q_.min_degree) return;
    }
    if (q_.edge_count) {
      const int rest = n - u - 1;
      if (total + rest * (rest - 1) / 2 < *q_.edge_count) return;
    }

    rows_[static_cast<std::size_t>(u)] = static_cast<Row>(rows_[static_cast<std::size_t>(u)] | added);
    degrees_[static_cast<std::size_t>(u)] = deg_u;
    for (int v = u + 1; v < n; ++v) {
      if ((added >> v) & 1U) {
        rows_[static_cast<std::size_t>(v)] = static_cast<Row>(rows_[static_cast<std::size_t>(v)] | (1U << u));
        ++degrees_[static_cast<std::size_t>(v)];
      }
    }

    bool ok = true;
    if (q_.prune_err_old) {
      const Row ru = rows_[static_cast<std::size_t>(u)];
      for (int w = 0; w < u && ok; ++w) {
        const Row rw = rows_[static_cast<std::size_t>(w)];
        if (std::popcount(static_cast<unsigned>(ru & rw)) >= 2 && std::popcount(static_cast<unsigned>(ru ^ rw)) < 3) ok = false;
      }
    }

    if (ok) {
      if (u + 1 == n - 1) {
        finish_last(total);
      } else {
        const int next = u + 1;
        const Row pool = static_cast<Row>(((1U << n) - 1) & ~((1U << (next + 1)) - 1));
        for (unsigned mask = 0;; mask = (mask - pool) & pool) {
          try_row(next, static_cast<Row>(mask), total, discovered);
          if (mask == pool) break;
        }
      }
    }

    for (int v = u + 1; v < n; ++v) {
      if ((added >> v) & 1U) {
        rows_[static_cast<std::size_t>(v)] = static_cast<Row>(rows_[static_cast<std::size_t>(v)] & ~(1U << u));
        --degrees_[static_cast<std::size_t>(v)];
      }
    }
    rows_[static_cast<std::size_t>(u)] = static_cast<Row>(rows_[static_cast<std::size_t>(u)] & ~added);
    degrees_[static_cast<std::size_t>(u)] -= added_count;
  }

  // Vertex n-1 has no row of its own; its degree is already final.
  void finish_last(int edges) {
    const int last = q_.n - 1;
    const int d = degrees_[static_cast<std::size_t>(last)];
    if (d < q_.min_degree || d > max_degree_) return;
    if (last > 0 && d > degrees_[static_cast<std::size_t>(last - 1)]) return;
    if (q_.edge_count && edges != *q_.edge_count) return;
    if (q_.prune_err_old) {
      const Row rl = rows_[static_cast<std::size_t>(last)];
      for (int w = 0; w < last; ++w) {
        const Row rw = rows_[static_cast<std::size_t>(w)];
        if (std::popcount(static_cast<unsigned>(rl & rw)) >= 2 && std::popcount(static_cast<unsigned>(rl ^ rw)) < 3) return;
      }
    }
    emit();
  }

  void emit() {
    std::vector<Edge> edges;
    for (int u = 0; u < q_.n; ++u) {
      for (int v = u + 1; v < q_.n; ++v) {
        if ((rows_[static_cast<std::size_t>(u)] >> v) & 1U) edges.emplace_back(u, v);
      }
    }
    if (q_.edge_count && static_cast<int>(edges.size()) != *q_.edge_count) return;
    Graph g = Graph::from_edges(q_.n, edges);
    if (!predicate_(g)) return;
    CanonicalGraph c = canonical_form(g);
    found_->try_emplace(c.code, std::move(c));
  }

  const EnumerationQuery& q_;
  const GraphPredicate& predicate_;
  int max_degree_;
  bool breadth_first_;
  std::array<Row, kMaxCanonicalVertices> rows_{};
  std::array<int, kMaxCanonicalVertices> degrees_{};
  std::map<std::uint64_t, CanonicalGraph>* found_ = nullptr;
};

}  // namespace

std::vector<CanonicalGraph> enumerate_graphs(const EnumerationQuery& query, const GraphPredicate& predicate) {
  if (query.n > kMaxCanonicalVertices) {
    throw ResourceError("enumeration supports n <= " + std::to_string(kMaxCanonicalVertices) + ", got " +
                        std::to_string(query.n));
  }
  if (query.n < 0) throw std::invalid_argument("negative vertex count");

  std::map<std::uint64_t, CanonicalGraph> merged;
  if (query.n <= 1) {
    LabeledGenerator gen(query, predicate);
    gen.run_trivial(merged);
  } else {
    const std::vector<Row> tasks = LabeledGenerator(query, predicate).first_rows();
    const int jobs = std::max(1, query.jobs);
    std::vector<std::map<std::uint64_t, CanonicalGraph>> partial(static_cast<std::size_t>(jobs));
    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    auto worker = [&](std::size_t slot) {
      LabeledGenerator gen(query, predicate);
      for (std::size_t t = next++; t < tasks.size(); t = next++) {
        try {
          gen.run_from(tasks[t], partial[slot]);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next = tasks.size();
        }
      }
    };
    if (jobs == 1) {
      worker(0);
    } else {
      std::vector<std::jthread> pool;
      for (int i = 0; i < jobs; ++i) pool.emplace_back(worker, static_cast<std::size_t>(i));
    }
    if (error) std::rethrow_exception(error);
    for (auto& part : partial) merged.merge(part);
  }

  std::vector<CanonicalGraph> out;
  out.reserve(merged.size());
  for (auto& [code, graph] : merged) out.push_back(std::move(graph));
  return out;
}

std::vector<CanonicalGraph> enumerate_graphs(int n, std::optional<int> edge_count, const GraphPredicate& predicate,
                                             int jobs) {
  EnumerationQuery q;
  q.n = n;
  q.edge_count = edge_count;
  q.jobs = jobs;
  return enumerate_graphs(q, predicate);
}

bool has_err_old(const Graph& g) { return exists_err_old(g).exists; }

std::vector<CanonicalGraph> cubic_graphs(int n, int jobs) {
  if (n % 2 != 0) return {};
  EnumerationQuery q;
  q.n = n;
  q.edge_count = 3 * n / 2;
  q.min_degree = 3;
  q.max_degree = 3;
  q.jobs = jobs;
  return enumerate_graphs(q, [](const Graph&) { return true; });
}

std::vector<CanonicalGraph> quasi_cubic_graphs(int n, int jobs) {
  if (n % 2 == 0) return {};
  EnumerationQuery q;
  q.n = n;
  q.edge_count = (3 * n + 1) / 2;
  q.min_degree = 3;
  q.max_degree = 4;
  q.jobs = jobs;
  return enumerate_graphs(q, [](const Graph& g) { return degree_summary(g).quasi_cubic; });
}

std::vector<Graph> cubic_edge_insertions(const std::vector<Graph>& base) {
  std::map<WideCode, Graph> found;
  for (const Graph& g : base) {
    const int s = g.n();
    const int t = g.n() + 1;
    const auto& edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      for (std::size_t j = i + 1; j < edges.size(); ++j) {
        std::vector<Edge> next;
        next.reserve(edges.size() + 3);
        for (std::size_t k = 0; k < edges.size(); ++k) {
          if (k != i && k != j) next.push_back(edges[k]);
        }
        next.emplace_back(edges[i].u, s);
        next.emplace_back(s, edges[i].v);
        next.emplace_back(edges[j].u, t);
        next.emplace_back(t, edges[j].v);
        next.emplace_back(s, t);
        Graph h = Graph::from_edges(g.n() + 2, next);
        const WideCode code = canonical_code_wide(h);
        found.try_emplace(code, std::move(h));
      }
    }
  }
  std::vector<Graph> out;
  out.reserve(found.size());
  for (auto& [code, g] : found) out.push_back(std::move(g));
  return out;
}

std::vector<Graph> cubic_vertex_truncations(const std::vector<Graph>& base) {
  std::map<WideCode, Graph> found;
  for (const Graph& g : base) {
    const int n = g.n();
    for (int v = 0; v < n; ++v) {
      // v keeps its first neighbour; two new vertices take the others.
      const std::vector<int> nb = g.neighbors(v).to_vector();
      if (nb.size() != 3) throw std::invalid_argument("vertex truncation needs a cubic graph");
      std::vector<Edge> next;
      for (const Edge& e : g.edges()) {
        if (e.u != v && e.v != v) next.push_back(e);
      }
      const int corner[3] = {v, n, n + 1};
      for (int i = 0; i < 3; ++i) {
        next.emplace_back(corner[i], nb[static_cast<std::size_t>(i)]);
        next.emplace_back(corner[i], corner[(i + 1) % 3]);
      }
      Graph h = Graph::from_edges(n + 2, next);
      const WideCode code = canonical_code_wide(h);
      found.try_emplace(code, std::move(h));
    }
  }
  std::vector<Graph> out;
  out.reserve(found.size());
  for (auto& [code, g] : found) out.push_back(std::move(g));
  return out;
}

std::vector<Graph> cubic_diamond_insertions(const std::vector<Graph>& base) {
  std::map<WideCode, Graph> found;
  for (const Graph& g : base) {
    const int n = g.n();
    const auto& edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      std::vector<Edge> next;
      for (std::size_t k = 0; k < edges.size(); ++k) {
        if (k != i) next.push_back(edges[k]);
      }
      // Diamond on n..n+3 with n and n+1 the degree-2 tips.
      next.emplace_back(edges[i].u, n);
      next.emplace_back(n + 1, edges[i].v);
      for (int tip : {n, n + 1}) {
        next.emplace_back(tip, n + 2);
        next.emplace_back(tip, n + 3);
      }
      next.emplace_back(n + 2, n + 3);
      Graph h = Graph::from_edges(n + 4, next);
      const WideCode code = canonical_code_wide(h);
      found.try_emplace(code, std::move(h));
    }
  }
  std::vector<Graph> out;
  out.reserve(found.size());
  for (auto& [code, g] : found) out.push_back(std::move(g));
  return out;
}

std::vector<Graph> connected_cubic_graphs(int n) {
  if (n < 4 || n % 2 != 0 || n > kMaxWideCanonicalVertices) {
    throw std::invalid_argument("connected_cubic_graphs needs even 4 <= n <= " +
                                std::to_string(kMaxWideCanonicalVertices) + ", got " + std::to_string(n));
  }
  // levels[i] holds the graphs on 4 + 2i vertices; exact up to the
  // enumeration limit, grown beyond it.
  std::vector<std::vector<Graph>> levels;
  for (int size = 4; size <= std::min(n, kMaxCanonicalVertices); size += 2) {
    std::vector<Graph> level;
    for (CanonicalGraph& c : cubic_graphs(size)) {
      if (is_connected(c.graph)) level.push_back(std::move(c.graph));
    }
    levels.push_back(std::move(level));
  }
  for (int size = kMaxCanonicalVertices + 2; size <= n; size += 2) {
    std::map<WideCode, Graph> merged;
    auto absorb = [&](std::vector<Graph> grown) {
      for (Graph& g : grown) {
        const WideCode code = canonical_code_wide(g);
        merged.try_emplace(code, std::move(g));
      }
    };
    const std::vector<Graph>& previous = levels.back();
    absorb(cubic_edge_insertions(previous));
    absorb(cubic_vertex_truncations(previous));
    if (levels.size() >= 2) absorb(cubic_diamond_insertions(levels[levels.size() - 2]));
    std::vector<Graph> level;
    for (auto& [code, g] : merged) level.push_back(std::move(g));
    levels.push_back(std::move(level));
  }
  return levels.back();
}

bool is_connected(const Graph& g) {
  if (g.n() == 0) return true;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

SupportingEdgeCount smallest_supporting_edge_count(int n, int jobs) {
  if (n < 7 || n > kMaxCanonicalVertices) {
    throw std::invalid_argument("smallest_supporting_edge_count needs 7 <= n <= 10, got " + std::to_string(n));
  }
  EnumerationQuery q;
  q.n = n;
  q.min_degree = 3;
  q.prune_err_old = true;
  q.jobs = jobs;
  for (int m = (3 * n + 1) / 2; m <= n * (n - 1) / 2; ++m) {
    q.edge_count = m;
    auto graphs = enumerate_graphs(q, has_err_old);
    if (!graphs.empty()) return {m, std::move(graphs)};
  }
  throw std::logic_error("no ERR:OLD-supporting graph found");
}

namespace {

std::optional<std::string> expansion_defect(const Graph& g, Edge ab, Edge cd) {
  for (const Edge& e : {ab, cd}) {
    if (e.u < 0 || e.v >= g.n() || e.u == e.v || !g.has_edge(e.u, e.v)) {
      return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "} is not an edge";
    }
  }
  if (ab.u == cd.u || ab.u == cd.v || ab.v == cd.u || ab.v == cd.v) return std::string("edges share a vertex");
  if (edge_in_triangle(g, ab)) return std::string("first edge lies in a triangle");
  if (edge_in_triangle(g, cd)) return std::string("second edge lies in a triangle");
  if (edges_are_p5_terminal(g, ab, cd)) return std::string("edges are the terminal edges of a P5");
  return std::nullopt;
}

}  // namespace

Graph quasi_cubic_expand(const Graph& g, Edge ab, Edge cd) {
  if (!degree_summary(g).cubic) throw std::invalid_argument("graph is not cubic");
  if (!has_err_old(g)) throw std::invalid_argument("graph has no ERR:OLD set");
  if (auto defect = expansion_defect(g, ab, cd)) throw std::invalid_argument(*defect);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (e != ab && e != cd) edges.push_back(e);
  }
  const int x = g.n();
  for (int v : {ab.u, ab.v, cd.u, cd.v}) edges.emplace_back(v, x);
  return Graph::from_edges(g.n() + 1, edges);
}

std::optional<std::pair<Edge, Edge>> first_expandable_pair(const Graph& g) {
  if (!degree_summary(g).cubic || !has_err_old(g)) return std::nullopt;
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (!expansion_defect(g, edges[i], edges[j])) return std::pair{edges[i], edges[j]};
    }
  }
  return std::nullopt;
}

}  // namespace errold
