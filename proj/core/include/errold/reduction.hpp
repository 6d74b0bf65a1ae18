#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "errold/cnf.hpp"
#include "errold/graph.hpp"
#include "errold/vertex_set.hpp"

namespace errold {

// Seven-vertex forcing block. b, c, d, e never receive outside edges;
// a, f, g may. Any ERR:OLD set contains all seven.
//
//   a-b a-c b-c b-f c-f c-d d-f d-e d-g e-f e-g
struct ForcingBlock {
  int a, b, c, d, e, f, g;

  std::array<int, 7> vertices() const { return {a, b, c, d, e, f, g}; }
};

inline constexpr int kForcingBlockEdges = 11;

// Variable block F_i: 25 vertices, 51 edges. Ids are base+0..6 (block A),
// base+7..13 (B), base+14..20 (C), then x, not-x, p, q.
//
//   p - fA fB x !x     q - aC gC x !x
//   x - aA gA fC      !x - aB gB fC
//   aA-aB  gA-gB  aC-gC  fA-fB
struct VariableGadget {
  int variable = 1;
  int base = 0;
  std::array<ForcingBlock, 3> blocks{};
  int positive = 0;
  int negative = 0;
  int p = 0;
  int q = 0;
};

// Clause block H_j: 8 vertices. Ids base+0..6 form a forcing block, base+7
// is y. Internal edges: the block's 11, a-g, y-a, y-g; the three edges from
// y to the clause's literal vertices are owned by this block (17 total).
// y is the clause vertex that the literals attach to, so `y` and `c` are
// the same id.
struct ClauseGadget {
  int clause = 1;
  int base = 0;
  ForcingBlock block{};
  int y = 0;
  int c = 0;
  std::array<int, 3> literal_vertices{};
};

inline constexpr int kVariableGadgetVertices = 25;
inline constexpr int kVariableGadgetEdges = 51;
inline constexpr int kVariableGadgetForced = 21;
inline constexpr int kClauseGadgetVertices = 8;
inline constexpr int kClauseGadgetEdges = 17;
inline constexpr int kClauseGadgetForced = 7;

struct ReductionInstance {
  CnfFormula formula;
  Graph graph;
  int k = 0;
  std::vector<VariableGadget> variables;
  std::vector<ClauseGadget> clauses;
  VertexSet forced;  // every forcing-block vertex

  // x_i, !x_i, p_i, q_i for each variable, then y_j for each clause.
  std::vector<int> free_vertices() const;
};

// Graph on 25N + 8M vertices and 51N + 17M edges with K = 22N + 7M.
ReductionInstance build_instance(const CnfFormula& f);

// Same layout with a replacement graph (for mutation tests and reloading).
ReductionInstance with_graph(const ReductionInstance& inst, Graph g);

// Manifest lines: "K <value>", "forced <id>...", "literal <i> <pos> <neg>",
// "clause <j> <y> <c>", plus '#' comments documenting block ranges and
// cross-edge ownership.
void write_manifest(std::ostream& out, const ReductionInstance& inst);

struct GadgetReport {
  bool ok = true;
  int forced_count = 0;
  // Set when the instance was small enough (4N + M <= 20) to confirm by
  // restricted exhaustive search that no ERR:OLD set has fewer than K
  // vertices and that one of exactly K exists iff the formula is
  // satisfiable.
  std::optional<bool> lower_bound_confirmed;
  std::vector<std::string> defects;  // each names its gadget (F_i, H_j) or "instance"
};

inline constexpr int kMaxRestrictedFreeVertices = 20;

// Checks vertex/edge/K counts; that each designated vertex v is forced
// (V - {v} is not ERR:OLD, hence by monotonicity no ERR:OLD set omits v);
// that p_i and q_i need x_i or !x_i to reach three dominators; and that y_j is
// 3-dominated over the forced set plus a subset of its literals exactly when
// that subset is nonempty.
GadgetReport validate_gadgets(const ReductionInstance& inst);

// Forced vertices plus x_i (true) or !x_i (false) for each variable.
VertexSet encode_assignment(const ReductionInstance& inst, const Assignment& a);

// Throws std::invalid_argument unless S is an ERR:OLD set with |S| <= K that
// holds exactly one literal vertex per variable.
Assignment decode_assignment(const ReductionInstance& inst, const VertexSet& s);

struct RoundtripResult {
  bool agree = false;
  bool satisfiable = false;
  bool graph_decision = false;        // ERR:OLD(G) <= K
  std::optional<VertexSet> witness;   // first ERR:OLD set of size <= K found
  std::optional<Assignment> decoded;  // decode_assignment(witness)
  std::uint64_t subsets_checked = 0;
};

// Compares sat_brute_force against an exhaustive search over subsets of the
// 4N + M free vertices, forced vertices always in, sizes 0..K - |forced|.
// Agreement also requires a decoded witness to satisfy the formula. Throws
// ResourceError when 4N + M > kMaxRestrictedFreeVertices.
RoundtripResult roundtrip_check(const CnfFormula& f, int jobs = 1);

// Lexicographically first ERR:OLD set of size <= inst.k reachable by adding
// free vertices to the forced set, or nullopt.
std::optional<VertexSet> restricted_search(const ReductionInstance& inst, int max_extra,
                                           std::uint64_t* subsets_checked = nullptr, int jobs = 1);

}  // namespace errold
