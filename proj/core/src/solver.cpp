#include "errold/solver.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <numeric>
#include <thread>

#include "errold/errors.hpp"

namespace errold {
namespace {

constexpr int kNoBound = std::numeric_limits<int>::max();

bool feasible_at_all(const Graph& g, const DetectionKind& kind) {
  if (kind == kErrOld) return exists_err_old(g).exists;
  return verify(g, g.all_vertices(), kind).pass;
}

class BranchAndBound {
 public:
  BranchAndBound(const Graph& g, const DetectionKind& kind, std::optional<std::uint64_t> budget)
      : g_(g), kind_(kind), budget_(budget) {
    reach_.reserve(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) reach_.push_back(within_distance_two(g, v));
    forced_ = forced_detectors(g, kind);
    for (int v = 0; v < g.n(); ++v) {
      if (!forced_.contains(v)) order_.push_back(v);
    }
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
  }

  const std::vector<int>& order() const { return order_; }
  const VertexSet& forced() const { return forced_; }

  struct TaskResult {
    int size = kNoBound;
    std::optional<VertexSet> set;
  };

  // Explores the subtree selected by `prefix` (true = include) over the first
  // prefix.size() branching vertices.
  TaskResult run(const std::vector<bool>& prefix, std::atomic<int>& shared_best,
                 std::atomic<std::uint64_t>& nodes) {
    TaskResult result;
    prefix_ = &prefix;
    shared_best_ = &shared_best;
    nodes_ = &nodes;
    result_ = &result;
    search(0, forced_, g_.all_vertices());
    return result;
  }

 private:
  void search(std::size_t depth, const VertexSet& in, const VertexSet& avail) {
    const std::uint64_t visited = nodes_->fetch_add(1, std::memory_order_relaxed) + 1;
    if (budget_ && visited > *budget_) {
      const int best = shared_best_->load();
      throw BudgetExhausted("node budget of " + std::to_string(*budget_) + " exhausted",
                            best == kNoBound ? std::nullopt : std::optional<int>(best));
    }

    int deficit = 0;
    for (int u = 0; u < g_.n(); ++u) {
      deficit = std::max(deficit, kind_.min_domination - VertexSet::count_and(g_.neighbors(u), in));
    }
    const int bound = in.count() + deficit;
    if (bound >= result_->size || bound > shared_best_->load(std::memory_order_relaxed)) return;

    if (deficit == 0 && verify(g_, in, kind_).pass) {
      result_->size = bound;
      result_->set = in;
      int current = shared_best_->load();
      while (bound < current && !shared_best_->compare_exchange_weak(current, bound)) {
      }
      return;
    }
    if (depth == order_.size()) return;

    const int w = order_[depth];
    const bool constrained = depth < prefix_->size();
    const bool forced_choice = constrained && (*prefix_)[depth];

    if (!constrained || !forced_choice) {
      VertexSet reduced = avail;
      reduced.erase(w);
      if (still_valid_without(w, reduced)) search(depth + 1, in, reduced);
    }
    if (!constrained || forced_choice) {
      VertexSet grown = in;
      grown.insert(w);
      search(depth + 1, grown, avail);
    }
  }

  // `avail` was valid before w was removed; only w's neighbours lose a
  // dominator and only pairs with exactly one of them adjacent to w change.
  bool still_valid_without(int w, const VertexSet& avail) const {
    for (int u : g_.neighbors(w)) {
      if (VertexSet::count_and(g_.neighbors(u), avail) < kind_.min_domination) return false;
    }
    for (int u : g_.neighbors(w)) {
      for (int v : reach_[static_cast<std::size_t>(u)]) {
        if (g_.has_edge(w, v)) continue;
        const VertexSet& nu = g_.neighbors(u);
        const VertexSet& nv = g_.neighbors(v);
        int value = 0;
        if (kind_.mode == DistinguishMode::symmetric) {
          value = VertexSet::count_xor_and(nu, nv, avail);
        } else {
          value = std::max(VertexSet::count_andnot_and(nu, nv, avail),
                           VertexSet::count_andnot_and(nv, nu, avail));
        }
        if (value < kind_.distinguish_threshold) return false;
      }
    }
    return true;
  }

  const Graph& g_;
  DetectionKind kind_;
  std::optional<std::uint64_t> budget_;
  std::vector<VertexSet> reach_;
  VertexSet forced_;
  std::vector<int> order_;

  const std::vector<bool>* prefix_ = nullptr;
  std::atomic<int>* shared_best_ = nullptr;
  std::atomic<std::uint64_t>* nodes_ = nullptr;
  TaskResult* result_ = nullptr;
};

SolveResult solve_branch_and_bound(const Graph& g, const DetectionKind& kind, const SolveOptions& options) {
  std::atomic<int> shared_best{kNoBound};
  std::atomic<std::uint64_t> nodes{0};
  BranchAndBound probe(g, kind, options.node_budget);

  const int jobs = std::max(1, options.jobs);
  int split = 0;
  if (jobs > 1) {
    while ((1 << split) < 8 * jobs && split < static_cast<int>(probe.order().size()) && split < 12) ++split;
  }
  const std::size_t tasks = std::size_t{1} << split;
  std::vector<BranchAndBound::TaskResult> results(tasks);

  auto prefix_for = [&](std::size_t task) {
    // Task order follows depth-first order: exclude (false) before include.
    std::vector<bool> prefix(static_cast<std::size_t>(split));
    for (int i = 0; i < split; ++i) prefix[static_cast<std::size_t>(i)] = (task >> (split - 1 - i)) & 1U;
    return prefix;
  };

  if (tasks == 1) {
    results[0] = probe.run({}, shared_best, nodes);
  } else {
    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    auto worker = [&] {
      BranchAndBound local(g, kind, options.node_budget);
      for (std::size_t t = next++; t < tasks; t = next++) {
        try {
          results[t] = local.run(prefix_for(t), shared_best, nodes);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next = tasks;
        }
      }
    };
    std::vector<std::jthread> pool;
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
    pool.clear();
    if (error) std::rethrow_exception(error);
  }

  SolveResult out;
  out.nodes_explored = nodes.load();
  const BranchAndBound::TaskResult* best = nullptr;
  for (const auto& r : results) {
    if (r.set && (best == nullptr || r.size < best->size)) best = &r;
  }
  if (best != nullptr) {
    out.status = SolveStatus::optimal;
    out.optimum = best->size;
    out.witness_set = best->set;
  }
  return out;
}

SolveResult solve_exhaustive(const Graph& g, const DetectionKind& kind, const SolveOptions& options) {
  SolveResult out;
  const int n = g.n();
  for (int size = 0; size <= n; ++size) {
    std::vector<int> combo(static_cast<std::size_t>(size));
    std::iota(combo.begin(), combo.end(), 0);
    while (true) {
      ++out.nodes_explored;
      if (options.node_budget && out.nodes_explored > *options.node_budget) {
        throw BudgetExhausted("node budget of " + std::to_string(*options.node_budget) + " exhausted",
                              std::nullopt);
      }
      VertexSet s(n, combo);
      if (verify(g, s, kind).pass) {
        out.status = SolveStatus::optimal;
        out.optimum = size;
        out.witness_set = std::move(s);
        return out;
      }
      int i = size - 1;
      while (i >= 0 && combo[static_cast<std::size_t>(i)] == n - size + i) --i;
      if (i < 0) break;
      ++combo[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < size; ++j) combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

}  // namespace

SolveResult minimum_detector_set(const Graph& g, const DetectionKind& kind, const SolveOptions& options) {
  if (options.strategy == SolveStrategy::exhaustive) return solve_exhaustive(g, kind, options);
  if (!feasible_at_all(g, kind)) return {};
  return solve_branch_and_bound(g, kind, options);
}

bool decision(const Graph& g, const DetectionKind& kind, int k, const SolveOptions& options) {
  const SolveResult r = minimum_detector_set(g, kind, options);
  return r.status == SolveStatus::optimal && *r.optimum <= k;
}

}  // namespace errold
