#include "errold/reduction.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <variant>

#include "errold/detection.hpp"
#include "errold/errors.hpp"

namespace errold {
namespace {

ForcingBlock block_at(int base) { return {base, base + 1, base + 2, base + 3, base + 4, base + 5, base + 6}; }

void add_block_edges(const ForcingBlock& k, std::vector<Edge>& edges) {
  const std::pair<int, int> local[] = {{k.a, k.b}, {k.a, k.c}, {k.b, k.c}, {k.b, k.f}, {k.c, k.f}, {k.c, k.d},
                                       {k.d, k.f}, {k.d, k.e}, {k.d, k.g}, {k.e, k.f}, {k.e, k.g}};
  for (auto [u, v] : local) edges.emplace_back(u, v);
}

std::string gadget_of(const ReductionInstance& inst, int v) {
  const int variable_span = kVariableGadgetVertices * inst.formula.num_variables;
  if (v < variable_span) return "F_" + std::to_string(v / kVariableGadgetVertices + 1);
  return "H_" + std::to_string((v - variable_span) / kClauseGadgetVertices + 1);
}

int domination_with(const Graph& g, const VertexSet& s, int v) { return VertexSet::count_and(g.neighbors(v), s); }

}  // namespace

std::vector<int> ReductionInstance::free_vertices() const {
  std::vector<int> out;
  for (const VariableGadget& x : variables) {
    out.insert(out.end(), {x.positive, x.negative, x.p, x.q});
  }
  for (const ClauseGadget& c : clauses) out.push_back(c.y);
  return out;
}

ReductionInstance build_instance(const CnfFormula& f) {
  validate(f);
  ReductionInstance inst;
  inst.formula = f;
  const int n_vars = f.num_variables;
  const int n_clauses = f.num_clauses();
  const int n = kVariableGadgetVertices * n_vars + kClauseGadgetVertices * n_clauses;
  inst.k = 22 * n_vars + 7 * n_clauses;
  inst.forced = VertexSet(n);

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(kVariableGadgetEdges * n_vars + kClauseGadgetEdges * n_clauses));

  for (int i = 0; i < n_vars; ++i) {
    VariableGadget x;
    x.variable = i + 1;
    x.base = kVariableGadgetVertices * i;
    for (int b = 0; b < 3; ++b) x.blocks[static_cast<std::size_t>(b)] = block_at(x.base + 7 * b);
    x.positive = x.base + 21;
    x.negative = x.base + 22;
    x.p = x.base + 23;
    x.q = x.base + 24;
    const auto& [A, B, C] = x.blocks;
    for (const ForcingBlock& blk : x.blocks) {
      add_block_edges(blk, edges);
      for (int v : blk.vertices()) inst.forced.insert(v);
    }
    for (int w : {A.f, B.f, x.positive, x.negative}) edges.emplace_back(x.p, w);
    for (int w : {C.a, C.g, x.positive, x.negative}) edges.emplace_back(x.q, w);
    for (int w : {A.a, A.g, C.f}) edges.emplace_back(x.positive, w);
    for (int w : {B.a, B.g, C.f}) edges.emplace_back(x.negative, w);
    edges.emplace_back(A.a, B.a);
    edges.emplace_back(A.g, B.g);
    edges.emplace_back(C.a, C.g);
    edges.emplace_back(A.f, B.f);
    inst.variables.push_back(x);
  }

  for (int j = 0; j < n_clauses; ++j) {
    ClauseGadget c;
    c.clause = j + 1;
    c.base = kVariableGadgetVertices * n_vars + kClauseGadgetVertices * j;
    c.block = block_at(c.base);
    c.y = c.base + 7;
    c.c = c.y;
    add_block_edges(c.block, edges);
    for (int v : c.block.vertices()) inst.forced.insert(v);
    edges.emplace_back(c.block.a, c.block.g);
    edges.emplace_back(c.y, c.block.a);
    edges.emplace_back(c.y, c.block.g);
    const Clause& clause = f.clauses[static_cast<std::size_t>(j)];
    for (std::size_t t = 0; t < 3; ++t) {
      const VariableGadget& x = inst.variables[static_cast<std::size_t>(clause[t].variable - 1)];
      c.literal_vertices[t] = clause[t].positive ? x.positive : x.negative;
      edges.emplace_back(c.y, c.literal_vertices[t]);
    }
    inst.clauses.push_back(c);
  }

  inst.graph = Graph::from_edges(n, edges);
  return inst;
}

ReductionInstance with_graph(const ReductionInstance& inst, Graph g) {
  ReductionInstance out = inst;
  out.graph = std::move(g);
  return out;
}

void write_manifest(std::ostream& out, const ReductionInstance& inst) {
  out << "# variables " << inst.formula.num_variables << " clauses " << inst.formula.num_clauses() << '\n';
  for (const VariableGadget& x : inst.variables) {
    out << "# block F_" << x.variable << ' ' << x.base << ' ' << x.base + kVariableGadgetVertices - 1
        << " (forcing blocks +0..6 +7..13 +14..20, x +21, not-x +22, p +23, q +24)\n";
  }
  for (const ClauseGadget& c : inst.clauses) {
    out << "# block H_" << c.clause << ' ' << c.base << ' ' << c.base + kClauseGadgetVertices - 1
        << " (forcing block +0..6, y +7)\n";
    for (int lit : c.literal_vertices) out << "# cross H_" << c.clause << ' ' << c.y << ' ' << lit << '\n';
  }
  out << "K " << inst.k << '\n';
  out << "forced";
  for (int v : inst.forced) out << ' ' << v;
  out << '\n';
  for (const VariableGadget& x : inst.variables) {
    out << "literal " << x.variable << ' ' << x.positive << ' ' << x.negative << '\n';
  }
  for (const ClauseGadget& c : inst.clauses) out << "clause " << c.clause << ' ' << c.y << ' ' << c.c << '\n';
}

GadgetReport validate_gadgets(const ReductionInstance& inst) {
  GadgetReport report;
  const Graph& g = inst.graph;
  const int n_vars = inst.formula.num_variables;
  const int n_clauses = inst.formula.num_clauses();
  report.forced_count = inst.forced.count();

  auto defect = [&](std::string what) {
    report.ok = false;
    report.defects.push_back(std::move(what));
  };

  if (g.n() != 25 * n_vars + 8 * n_clauses) defect("instance: vertex count " + std::to_string(g.n()));
  if (g.m() != 51 * n_vars + 17 * n_clauses) defect("instance: edge count " + std::to_string(g.m()));
  if (inst.k != 22 * n_vars + 7 * n_clauses) defect("instance: K = " + std::to_string(inst.k));
  if (report.forced_count != 21 * n_vars + 7 * n_clauses) {
    defect("instance: designated forced count " + std::to_string(report.forced_count));
  }
  if (!report.ok) return report;

  const VertexSet all = g.all_vertices();
  if (const Verdict whole = verify(g, all, kErrOld); !whole.pass) {
    const Witness& w = *whole.failure_witness;
    const int at = std::holds_alternative<VertexWitness>(w) ? std::get<VertexWitness>(w).vertex : std::get<PairWitness>(w).u;
    defect(gadget_of(inst, at) + ": V(G) is not an ERR:OLD set (witness at vertex " + std::to_string(at) + ")");
  }

  // ERR:OLD sets are closed under supersets, so v lies in every one of them
  // exactly when V - {v} is not one.
  for (int v : inst.forced) {
    VertexSet without = all;
    without.erase(v);
    if (verify(g, without, kErrOld).pass) defect(gadget_of(inst, v) + ": vertex " + std::to_string(v) + " is not forced");
  }

  for (const VariableGadget& x : inst.variables) {
    const std::string name = "F_" + std::to_string(x.variable);
    VertexSet no_literal = all;
    no_literal.erase(x.positive);
    no_literal.erase(x.negative);
    VertexSet with_pos = inst.forced;
    with_pos.insert(x.positive);
    VertexSet with_neg = inst.forced;
    with_neg.insert(x.negative);
    for (auto [label, v] : {std::pair{"p", x.p}, std::pair{"q", x.q}}) {
      if (domination_with(g, no_literal, v) >= 3) {
        defect(name + ": " + label + " is 3-dominated without a literal detector");
      }
      if (domination_with(g, with_pos, v) < 3 || domination_with(g, with_neg, v) < 3) {
        defect(name + ": " + label + " is not 3-dominated by a single literal detector");
      }
    }
  }

  for (const ClauseGadget& c : inst.clauses) {
    const std::string name = "H_" + std::to_string(c.clause);
    VertexSet no_literal = all;
    for (int lit : c.literal_vertices) no_literal.erase(lit);
    if (domination_with(g, no_literal, c.y) >= 3) defect(name + ": y is 3-dominated without a literal detector");
    for (unsigned mask = 0; mask < 8; ++mask) {
      VertexSet s = inst.forced;
      for (unsigned t = 0; t < 3; ++t) {
        if ((mask >> t) & 1U) s.insert(c.literal_vertices[t]);
      }
      const bool dominated = domination_with(g, s, c.y) >= 3;
      if (dominated != (mask != 0)) {
        defect(name + ": y domination disagrees with literal subset " + std::to_string(mask));
        break;
      }
    }
  }

  const int free_count = 4 * n_vars + n_clauses;
  if (report.ok && free_count <= kMaxRestrictedFreeVertices) {
    const auto found = restricted_search(inst, n_vars);
    const bool smaller = found && found->count() < inst.k;
    const bool satisfiable = sat_brute_force(inst.formula).satisfiable;
    report.lower_bound_confirmed = !smaller && found.has_value() == satisfiable;
    if (smaller) defect("instance: an ERR:OLD set smaller than K exists");
    if (found.has_value() != satisfiable) defect("instance: ERR:OLD(G) <= K disagrees with satisfiability");
  }
  return report;
}

VertexSet encode_assignment(const ReductionInstance& inst, const Assignment& a) {
  if (static_cast<int>(a.size()) != inst.formula.num_variables) {
    throw std::invalid_argument("assignment size does not match the formula");
  }
  VertexSet s = inst.forced;
  for (const VariableGadget& x : inst.variables) {
    s.insert(a[static_cast<std::size_t>(x.variable - 1)] ? x.positive : x.negative);
  }
  return s;
}

Assignment decode_assignment(const ReductionInstance& inst, const VertexSet& s) {
  if (s.universe() != inst.graph.n()) throw std::invalid_argument("detector set does not match the instance");
  if (s.count() > inst.k) throw std::invalid_argument("detector set larger than K");
  if (!verify(inst.graph, s, kErrOld).pass) throw std::invalid_argument("not an ERR:OLD set");
  Assignment a(static_cast<std::size_t>(inst.formula.num_variables));
  for (const VariableGadget& x : inst.variables) {
    const bool pos = s.contains(x.positive);
    const bool neg = s.contains(x.negative);
    if (pos == neg) {
      throw std::invalid_argument("variable " + std::to_string(x.variable) +
                                  (pos ? " has both literal vertices" : " has no literal vertex"));
    }
    a[static_cast<std::size_t>(x.variable - 1)] = pos;
  }
  return a;
}

std::optional<VertexSet> restricted_search(const ReductionInstance& inst, int max_extra,
                                           std::uint64_t* subsets_checked, int jobs) {
  const std::vector<int> free = inst.free_vertices();
  const int total = static_cast<int>(free.size());
  std::atomic<std::uint64_t> checked{0};

  // Combinations of `size` free vertices whose first element is free[lead],
  // in lexicographic order; returns the first that verifies.
  auto scan = [&](int size, int lead) -> std::optional<VertexSet> {
    std::vector<int> combo(static_cast<std::size_t>(size));
    if (size > 0) {
      combo[0] = lead;
      for (int i = 1; i < size; ++i) combo[static_cast<std::size_t>(i)] = lead + i;
      if (combo.back() >= total) return std::nullopt;
    }
    while (true) {
      checked.fetch_add(1, std::memory_order_relaxed);
      VertexSet s = inst.forced;
      for (int idx : combo) s.insert(free[static_cast<std::size_t>(idx)]);
      if (verify(inst.graph, s, kErrOld).pass) return s;
      if (size <= 1) return std::nullopt;
      int i = size - 1;
      while (i >= 1 && combo[static_cast<std::size_t>(i)] == total - size + i) --i;
      if (i < 1) return std::nullopt;
      ++combo[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < size; ++j) combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
    }
  };

  std::optional<VertexSet> found;
  for (int size = 0; size <= std::min(max_extra, total) && !found; ++size) {
    const int leads = size == 0 ? 1 : total - size + 1;
    std::vector<std::optional<VertexSet>> hits(static_cast<std::size_t>(leads));
    std::atomic<int> next{0};
    std::atomic<int> first_hit{leads};
    auto worker = [&] {
      for (int lead = next++; lead < leads; lead = next++) {
        if (lead > first_hit.load()) continue;
        hits[static_cast<std::size_t>(lead)] = scan(size, lead);
        if (hits[static_cast<std::size_t>(lead)]) {
          int current = first_hit.load();
          while (lead < current && !first_hit.compare_exchange_weak(current, lead)) {
          }
        }
      }
    };
    if (jobs <= 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
    }
    for (auto& h : hits) {
      if (h) {
        found = std::move(h);
        break;
      }
    }
  }
  if (subsets_checked != nullptr) *subsets_checked = checked.load();
  return found;
}

RoundtripResult roundtrip_check(const CnfFormula& f, int jobs) {
  const int free_count = 4 * f.num_variables + f.num_clauses();
  if (free_count > kMaxRestrictedFreeVertices) {
    throw ResourceError("roundtrip needs 4N + M <= " + std::to_string(kMaxRestrictedFreeVertices) + ", got " +
                        std::to_string(free_count));
  }
  RoundtripResult r;
  r.satisfiable = sat_brute_force(f).satisfiable;
  const ReductionInstance inst = build_instance(f);
  r.witness = restricted_search(inst, inst.k - inst.forced.count(), &r.subsets_checked, jobs);
  r.graph_decision = r.witness.has_value();
  r.agree = r.satisfiable == r.graph_decision;
  if (r.witness) {
    try {
      r.decoded = decode_assignment(inst, *r.witness);
      r.agree = r.agree && satisfies(f, *r.decoded);
    } catch (const std::invalid_argument&) {
      r.agree = false;
    }
  }
  return r;
}

}  // namespace errold
