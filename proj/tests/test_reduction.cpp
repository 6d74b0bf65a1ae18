#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "errold/cnf.hpp"
#include "errold/detection.hpp"
#include "errold/errors.hpp"
#include "errold/reduction.hpp"
#include "support.hpp"

using namespace errold;
namespace t = errold::testing;

namespace {

const char* kFourThree = "p cnf 4 3\n-1 -2 3 0\n1 2 -4 0\n1 -3 4 0\n";

CnfFormula random_formula(std::mt19937_64& rng, int n_vars, int n_clauses) {
  CnfFormula f;
  f.num_variables = n_vars;
  for (int j = 0; j < n_clauses; ++j) {
    auto vars = t::random_permutation(rng, n_vars);
    Clause c;
    for (std::size_t k = 0; k < 3; ++k) c[k] = {vars[k] + 1, (rng() & 1U) != 0};
    f.clauses.push_back(c);
  }
  return f;
}

CnfFormula all_sign_patterns() {
  CnfFormula f;
  f.num_variables = 3;
  for (unsigned m = 0; m < 8; ++m) f.clauses.push_back({Literal{1, (m & 1U) != 0}, Literal{2, (m & 2U) != 0}, Literal{3, (m & 4U) != 0}});
  return f;
}

}  // namespace

TEST(Dimacs, Examples) {
  const CnfFormula f = parse_dimacs_cnf("p cnf 3 1\n1 -2 3 0\n");
  EXPECT_EQ(f.num_variables, 3);
  EXPECT_EQ(f.num_clauses(), 1);
  EXPECT_EQ(f.clauses[0][1], (Literal{2, false}));
  EXPECT_THROW(parse_dimacs_cnf("p cnf 3 1\n1 1 2 0\n"), ValidationError);
  EXPECT_THROW(parse_dimacs_cnf("p cnf 3 2\n1 2 3 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs_cnf("p cnf 3 1\n1 2 0\n"), ValidationError);
  EXPECT_THROW(parse_dimacs_cnf("1 2 3 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs_cnf("p cnf 3 1\n1 2 4 0\n"), ValidationError);
  EXPECT_THROW(parse_dimacs_cnf("p cnf 3 1\n1 2 3\n"), ParseError);
}

TEST(Dimacs, CommentsAndMultilineClauses) {
  const CnfFormula f = parse_dimacs_cnf("c hi\np cnf 4 2\n1 2\n3 0 -1 -2 -4\n0\n");
  EXPECT_EQ(f.num_clauses(), 2);
  std::ostringstream out;
  write_dimacs_cnf(out, f);
  const CnfFormula g = parse_dimacs_cnf(out.str());
  EXPECT_EQ(g.num_variables, 4);
  EXPECT_EQ(g.clauses, f.clauses);
}

TEST(BruteForceSat, Examples) {
  EXPECT_TRUE(sat_brute_force(parse_dimacs_cnf("p cnf 3 1\n1 2 3 0\n")).satisfiable);
  EXPECT_FALSE(sat_brute_force(all_sign_patterns()).satisfiable);
  const CnfFormula four_three = parse_dimacs_cnf(kFourThree);
  const SatResult r = sat_brute_force(four_three);
  ASSERT_TRUE(r.satisfiable);
  EXPECT_TRUE(satisfies(four_three, *r.assignment));
  CnfFormula big;
  big.num_variables = 26;
  EXPECT_THROW(sat_brute_force(big), ResourceError);
}

TEST(Build, CountExamples) {
  const ReductionInstance four_three = build_instance(parse_dimacs_cnf(kFourThree));
  EXPECT_EQ(four_three.graph.n(), 124);
  EXPECT_EQ(four_three.graph.m(), 255);
  EXPECT_EQ(four_three.k, 109);
  std::mt19937_64 rng(1);
  const ReductionInstance a = build_instance(random_formula(rng, 3, 1));
  EXPECT_EQ(a.graph.n(), 83);
  EXPECT_EQ(a.graph.m(), 170);
  EXPECT_EQ(a.k, 73);
  EXPECT_EQ(a.forced.count(), 70);
  const ReductionInstance b = build_instance(random_formula(rng, 4, 2));
  EXPECT_EQ(b.graph.n(), 116);
  EXPECT_EQ(b.graph.m(), 238);
  EXPECT_EQ(b.k, 102);
}

TEST(Build, CountIdentitiesOnRandomFormulas) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const int m = static_cast<int>(rng() % 7);
    const ReductionInstance inst = build_instance(random_formula(rng, n, m));
    ASSERT_EQ(inst.graph.n(), 25 * n + 8 * m);
    ASSERT_EQ(inst.graph.m(), 51 * n + 17 * m);
    ASSERT_EQ(inst.k, 22 * n + 7 * m);
    ASSERT_EQ(inst.forced.count(), 21 * n + 7 * m);
    ASSERT_EQ(static_cast<int>(inst.free_vertices().size()), 4 * n + m);
  }
}

TEST(Build, LayoutAndManifest) {
  const ReductionInstance inst = build_instance(parse_dimacs_cnf(kFourThree));
  EXPECT_EQ(inst.variables[1].base, 25);
  EXPECT_EQ(inst.clauses[0].base, 100);
  EXPECT_EQ(inst.clauses[0].y, inst.clauses[0].c);
  // Clause 1 is (!x1 | !x2 | x3).
  EXPECT_EQ(inst.clauses[0].literal_vertices[0], inst.variables[0].negative);
  EXPECT_EQ(inst.clauses[0].literal_vertices[2], inst.variables[2].positive);
  for (const ClauseGadget& c : inst.clauses) {
    for (int lit : c.literal_vertices) EXPECT_TRUE(inst.graph.has_edge(c.y, lit));
  }
  std::ostringstream out;
  write_manifest(out, inst);
  const std::string text = out.str();
  EXPECT_NE(text.find("\nK 109\n"), std::string::npos);
  EXPECT_NE(text.find("\nliteral 1 21 22\n"), std::string::npos);
  EXPECT_NE(text.find("\nclause 1 107 107\n"), std::string::npos);
  EXPECT_NE(text.find("\nforced 0 1 2 "), std::string::npos);
}

TEST(Gadgets, SingleVariableFragment) {
  CnfFormula f;
  f.num_variables = 1;
  const ReductionInstance inst = build_instance(f);
  const GadgetReport rep = validate_gadgets(inst);
  EXPECT_TRUE(rep.ok);
  EXPECT_EQ(rep.forced_count, 21);
  ASSERT_TRUE(rep.lower_bound_confirmed.has_value());
  EXPECT_TRUE(*rep.lower_bound_confirmed);
  std::uint64_t checked = 0;
  EXPECT_FALSE(restricted_search(inst, 0, &checked).has_value());
  EXPECT_EQ(checked, 1U);
  const auto found = restricted_search(inst, 1);
  ASSERT_TRUE(found.has_value());
  EXPECT_EQ(found->count(), 22);
}

TEST(Gadgets, ThreeVariablesOneClause) {
  std::mt19937_64 rng(3);
  const GadgetReport rep = validate_gadgets(build_instance(random_formula(rng, 3, 1)));
  EXPECT_TRUE(rep.ok);
  EXPECT_EQ(rep.forced_count, 70);
  EXPECT_TRUE(rep.lower_bound_confirmed.value_or(false));
}

TEST(Gadgets, RemovingAnyGadgetEdgeIsReported) {
  const CnfFormula f = parse_dimacs_cnf(kFourThree);
  const ReductionInstance inst = build_instance(f);
  ASSERT_TRUE(validate_gadgets(inst).ok);
  int reported = 0;
  for (std::size_t drop = 0; drop < inst.graph.edges().size(); drop += 7) {
    std::vector<Edge> edges = inst.graph.edges();
    const Edge gone = edges[drop];
    edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(drop));
    const GadgetReport rep = validate_gadgets(with_graph(inst, Graph::from_edges(inst.graph.n(), edges)));
    ASSERT_FALSE(rep.ok) << gone.u << "-" << gone.v;
    ASSERT_FALSE(rep.defects.empty());
    const std::string& d = rep.defects.front();
    ASSERT_TRUE(d.rfind("F_", 0) == 0 || d.rfind("H_", 0) == 0 || d.rfind("instance", 0) == 0) << d;
    ++reported;
  }
  EXPECT_GT(reported, 30);
}

TEST(Gadgets, DefectNamesTheGadget) {
  CnfFormula f;
  f.num_variables = 2;
  const ReductionInstance inst = build_instance(f);
  // Add an edge between two internal vertices of F_2's first block and
  // remove one elsewhere to keep the edge count.
  std::vector<Edge> edges = inst.graph.edges();
  edges.erase(std::find(edges.begin(), edges.end(), Edge(25 + 1, 25 + 2)));
  edges.emplace_back(25 + 1, 25 + 4);
  const GadgetReport rep = validate_gadgets(with_graph(inst, Graph::from_edges(inst.graph.n(), edges)));
  ASSERT_FALSE(rep.ok);
  bool names_f2 = false;
  for (const std::string& d : rep.defects) names_f2 = names_f2 || d.rfind("F_2", 0) == 0;
  EXPECT_TRUE(names_f2) << ::testing::PrintToString(rep.defects);
}

TEST(Gadgets, IsolatedBlocksKeepLocalForcing) {
  // Without the clause-to-literal edges each block is its own component,
  // and every designated vertex v still leaves a violation inside its own
  // forcing block when removed.
  const ReductionInstance inst = build_instance(parse_dimacs_cnf(kFourThree));
  std::vector<Edge> internal;
  std::set<Edge> cross;
  for (const ClauseGadget& c : inst.clauses) {
    for (int lit : c.literal_vertices) cross.insert(Edge(c.y, lit));
  }
  for (const Edge& e : inst.graph.edges()) {
    if (!cross.contains(e)) internal.push_back(e);
  }
  const Graph g = Graph::from_edges(inst.graph.n(), internal);
  std::vector<ForcingBlock> blocks;
  for (const VariableGadget& x : inst.variables) blocks.insert(blocks.end(), x.blocks.begin(), x.blocks.end());
  for (const ClauseGadget& c : inst.clauses) blocks.push_back(c.block);
  for (const ForcingBlock& b : blocks) {
    const auto members = b.vertices();
    for (int v : members) {
      VertexSet s = g.all_vertices();
      s.erase(v);
      bool local = false;
      for (int u : members) local = local || VertexSet::count_and(g.neighbors(u), s) < 3;
      for (int u : members) {
        for (int w : members) {
          if (u < w && distinguishing_value(g, s, u, w, DistinguishMode::symmetric) < 3) local = true;
        }
      }
      ASSERT_TRUE(local) << "vertex " << v;
    }
  }
}

TEST(Encode, RoundTripsAssignments) {
  const CnfFormula f = parse_dimacs_cnf(kFourThree);
  const ReductionInstance inst = build_instance(f);
  for (unsigned bits = 0; bits < 16; ++bits) {
    Assignment a(4);
    for (int i = 0; i < 4; ++i) a[static_cast<std::size_t>(i)] = (bits >> i) & 1U;
    const VertexSet s = encode_assignment(inst, a);
    EXPECT_EQ(s.count(), inst.k);
    EXPECT_EQ(verify(inst.graph, s, kErrOld).pass, satisfies(f, a));
    if (satisfies(f, a)) {
      EXPECT_EQ(decode_assignment(inst, s), a);
    } else {
      EXPECT_THROW(decode_assignment(inst, s), std::invalid_argument);
    }
  }
}

TEST(Encode, BothLiteralsRejected) {
  const CnfFormula f = parse_dimacs_cnf(kFourThree);
  const ReductionInstance inst = build_instance(f);
  VertexSet s = encode_assignment(inst, {true, true, true, true});
  s.insert(inst.variables[0].negative);
  EXPECT_THROW(decode_assignment(inst, s), std::invalid_argument);
  s.erase(inst.variables[1].positive);
  EXPECT_THROW(decode_assignment(inst, s), std::invalid_argument);
}

TEST(Roundtrip, Examples) {
  std::mt19937_64 rng(4);
  const RoundtripResult a = roundtrip_check(random_formula(rng, 3, 1));
  EXPECT_TRUE(a.agree);
  EXPECT_TRUE(a.satisfiable);
  EXPECT_TRUE(a.graph_decision);
  const RoundtripResult b = roundtrip_check(parse_dimacs_cnf("p cnf 3 2\n1 2 3 0\n-1 -2 -3 0\n"));
  EXPECT_TRUE(b.agree);
  EXPECT_TRUE(b.graph_decision);
  const CnfFormula four_three = parse_dimacs_cnf(kFourThree);
  const RoundtripResult c = roundtrip_check(four_three);
  EXPECT_TRUE(c.agree);
  EXPECT_TRUE(c.graph_decision);
  ASSERT_TRUE(c.decoded.has_value());
  EXPECT_TRUE(satisfies(four_three, *c.decoded));
  const RoundtripResult d = roundtrip_check(all_sign_patterns());
  EXPECT_TRUE(d.agree);
  EXPECT_FALSE(d.satisfiable);
  EXPECT_FALSE(d.graph_decision);
  EXPECT_THROW(roundtrip_check(random_formula(rng, 5, 1)), ResourceError);
}

TEST(Roundtrip, ParallelMatchesSerial) {
  const CnfFormula four_three = parse_dimacs_cnf(kFourThree);
  const RoundtripResult serial = roundtrip_check(four_three, 1);
  const RoundtripResult parallel = roundtrip_check(four_three, 3);
  EXPECT_EQ(serial.witness, parallel.witness);
}

TEST(Roundtrip, EveryErrOldSetHasAtLeastKVertices) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 6; ++trial) {
    const ReductionInstance inst = build_instance(random_formula(rng, 3, 1 + trial));
    EXPECT_FALSE(restricted_search(inst, inst.formula.num_variables - 1).has_value());
  }
}
