#include "errold/detection.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace errold {
namespace {

int pair_value(const VertexSet& a, const VertexSet& b, DistinguishMode mode) {
  if (mode == DistinguishMode::symmetric) return (a ^ b).count();
  return std::max((a - b).count(), (b - a).count());
}

// Distance-2 pruning needs every far pair (disjoint dominator sets) to pass
// once domination holds.
bool far_pairs_automatic(const DetectionKind& kind) {
  return kind.mode == DistinguishMode::symmetric ? kind.distinguish_threshold <= 2 * kind.min_domination
                                                 : kind.distinguish_threshold <= kind.min_domination;
}

FourCycle canonical_cycle(std::array<int, 4> seq) {
  FourCycle best = seq;
  for (int r = 0; r < 4; ++r) {
    FourCycle fwd{};
    FourCycle rev{};
    for (int i = 0; i < 4; ++i) {
      fwd[static_cast<std::size_t>(i)] = seq[static_cast<std::size_t>((r + i) % 4)];
      rev[static_cast<std::size_t>(i)] = seq[static_cast<std::size_t>((r - i + 4) % 4)];
    }
    best = std::min({best, fwd, rev});
  }
  return best;
}

}  // namespace

DetectionKind parse_kind(std::string_view name) {
  for (const DetectionKind& k : kAllKinds) {
    if (k.name == name) return k;
  }
  throw std::invalid_argument("unknown detection kind '" + std::string(name) +
                              "' (expected old, redold, detold, err)");
}

VertexSet dominators(const Graph& g, const VertexSet& s, int v) { return g.neighbors(v) & s; }

DominationProfile domination_profile(const Graph& g, const VertexSet& s) {
  DominationProfile p;
  p.dominators.reserve(static_cast<std::size_t>(g.n()));
  p.domination.reserve(static_cast<std::size_t>(g.n()));
  for (int v = 0; v < g.n(); ++v) {
    p.dominators.push_back(dominators(g, s, v));
    p.domination.push_back(p.dominators.back().count());
  }
  return p;
}

int distinguishing_value(const Graph& g, const VertexSet& s, int u, int v, DistinguishMode mode) {
  if (u == v) throw std::invalid_argument("distinguishing_value needs two distinct vertices");
  return pair_value(dominators(g, s, u), dominators(g, s, v), mode);
}

Verdict verify(const Graph& g, const VertexSet& s, const DetectionKind& kind, VerifyStrategy strategy) {
  const DominationProfile profile = domination_profile(g, s);
  for (int v = 0; v < g.n(); ++v) {
    if (profile.domination[static_cast<std::size_t>(v)] < kind.min_domination) {
      return {false, VertexWitness{v, profile.domination[static_cast<std::size_t>(v)]}};
    }
  }
  const bool pruned = strategy == VerifyStrategy::pruned && far_pairs_automatic(kind);
  for (int u = 0; u < g.n(); ++u) {
    const VertexSet& nu = profile.dominators[static_cast<std::size_t>(u)];
    auto check = [&](int v) -> std::optional<Verdict> {
      const int value = pair_value(nu, profile.dominators[static_cast<std::size_t>(v)], kind.mode);
      if (value < kind.distinguish_threshold) return Verdict{false, PairWitness{u, v, value}};
      return std::nullopt;
    };
    if (pruned) {
      const VertexSet reach = within_distance_two(g, u);
      for (int v = reach.next(u); v != -1; v = reach.next(v)) {
        if (auto failed = check(v)) return *failed;
      }
    } else {
      for (int v = u + 1; v < g.n(); ++v) {
        if (auto failed = check(v)) return *failed;
      }
    }
  }
  return {true, std::nullopt};
}

bool is_open_dominating(const Graph& g, const VertexSet& s) {
  for (int v = 0; v < g.n(); ++v) {
    if (VertexSet::count_and(g.neighbors(v), s) == 0) return false;
  }
  return true;
}

bool verify_red_old_by_removal(const Graph& g, const VertexSet& s) {
  if (!is_open_dominating(g, s)) return false;
  for (int v : s) {
    VertexSet reduced = s;
    reduced.erase(v);
    if (!verify(g, reduced, kOld).pass) return false;
  }
  return true;
}

ExistenceResult exists_err_old(const Graph& g) {
  for (int v = 0; v < g.n(); ++v) {
    if (g.degree(v) < 3) return {false, LowDegreeWitness{v, g.degree(v)}};
  }
  for (int a = 0; a < g.n(); ++a) {
    for (int c = a + 1; c < g.n(); ++c) {
      const VertexSet common = g.neighbors(a) & g.neighbors(c);
      if (common.count() < 2) continue;
      const int value = (g.neighbors(a) ^ g.neighbors(c)).count();
      if (value >= 3) continue;
      const int b = common.first();
      const int d = common.next(b);
      return {false, FourCycleWitness{canonical_cycle({a, b, c, d}), a, c, value}};
    }
  }
  return {true, std::nullopt};
}

VertexSet forced_detectors(const Graph& g) { return forced_detectors(g, kErrOld); }

VertexSet forced_detectors(const Graph& g, const DetectionKind& kind) {
  VertexSet forced(g.n());
  for (int w = 0; w < g.n(); ++w) {
    if (g.degree(w) == kind.min_domination) forced |= g.neighbors(w);
  }
  return forced;
}

}  // namespace errold
