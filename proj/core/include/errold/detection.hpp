#pragma once

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "errold/graph.hpp"
#include "errold/vertex_set.hpp"

namespace errold {

enum class DistinguishMode { symmetric, one_sided };

// Parameters of an open-neighbourhood detection system: every vertex needs
// at least `min_domination` detector neighbours, and every pair must reach
// `distinguish_threshold` under `mode`.
struct DetectionKind {
  int min_domination = 1;
  int distinguish_threshold = 1;
  DistinguishMode mode = DistinguishMode::symmetric;
  std::string_view name = "old";

  friend bool operator==(const DetectionKind& a, const DetectionKind& b) {
    return a.min_domination == b.min_domination &&
           a.distinguish_threshold == b.distinguish_threshold && a.mode == b.mode;
  }
};

inline constexpr DetectionKind kOld{1, 1, DistinguishMode::symmetric, "old"};
inline constexpr DetectionKind kRedOld{2, 2, DistinguishMode::symmetric, "redold"};
inline constexpr DetectionKind kDetOld{2, 2, DistinguishMode::one_sided, "detold"};
inline constexpr DetectionKind kErrOld{3, 3, DistinguishMode::symmetric, "err"};

inline constexpr DetectionKind kAllKinds[] = {kOld, kRedOld, kDetOld, kErrOld};

// Accepts "old", "redold", "detold", "err". Throws std::invalid_argument.
DetectionKind parse_kind(std::string_view name);

struct VertexWitness {
  int vertex = 0;
  int domination = 0;
};

struct PairWitness {
  int u = 0;
  int v = 0;
  int value = 0;
};

using Witness = std::variant<VertexWitness, PairWitness>;

struct Verdict {
  bool pass = true;
  std::optional<Witness> failure_witness;

  explicit operator bool() const { return pass; }
};

// N_S(u) and dom(u) for every vertex u.
struct DominationProfile {
  std::vector<VertexSet> dominators;
  std::vector<int> domination;
};

VertexSet dominators(const Graph& g, const VertexSet& s, int v);
DominationProfile domination_profile(const Graph& g, const VertexSet& s);

// |N_S(u) xor N_S(v)| in symmetric mode, max(|N_S(u)-N_S(v)|, |N_S(v)-N_S(u)|)
// in one-sided mode. Throws std::invalid_argument when u == v.
int distinguishing_value(const Graph& g, const VertexSet& s, int u, int v, DistinguishMode mode);

enum class VerifyStrategy {
  // Only pairs at distance <= 2 are tested once domination holds.
  pruned,
  // Every unordered pair is tested.
  naive,
};

// Domination is checked first and reports the least failing vertex; then the
// least failing pair (u, v), u < v, in lexicographic order.
Verdict verify(const Graph& g, const VertexSet& s, const DetectionKind& kind,
               VerifyStrategy strategy = VerifyStrategy::pruned);

bool is_open_dominating(const Graph& g, const VertexSet& s);

// Definitional RED:OLD test: S is open-dominating and S - {v} is an OLD set
// for every v in S.
bool verify_red_old_by_removal(const Graph& g, const VertexSet& s);

struct LowDegreeWitness {
  int vertex = 0;
  int degree = 0;
};

// 4-cycle a-b-c-d whose diagonal (u, v) has |N(u) xor N(v)| = value < 3.
struct FourCycleWitness {
  FourCycle cycle{};
  int u = 0;
  int v = 0;
  int value = 0;
};

struct ExistenceResult {
  bool exists = false;
  std::optional<std::variant<LowDegreeWitness, FourCycleWitness>> witness;

  explicit operator bool() const { return exists; }
};

// ERR:OLD existence via minimum degree >= 3 plus the 4-cycle diagonal
// condition, enforced on both diagonals of every 4-cycle.
ExistenceResult exists_err_old(const Graph& g);

// Vertices with a neighbour of degree exactly 3; contained in every ERR:OLD set.
VertexSet forced_detectors(const Graph& g);

// Same rule for an arbitrary kind: a vertex of degree exactly d forces all of
// its neighbours. Equals forced_detectors(g) for kErrOld.
VertexSet forced_detectors(const Graph& g, const DetectionKind& kind);

}  // namespace errold
