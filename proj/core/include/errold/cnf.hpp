#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

namespace errold {

// Variable ids are 1-based as in DIMACS.
struct Literal {
  int variable = 1;
  bool positive = true;

  friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 3>;

// 3-SAT instance; every clause uses three distinct variables.
struct CnfFormula {
  int num_variables = 0;
  std::vector<Clause> clauses;

  int num_clauses() const { return static_cast<int>(clauses.size()); }
};

// Throws ValidationError when a clause has repeated variables or a
// variable outside 1..N.
void validate(const CnfFormula& f);

// DIMACS CNF: 'c' comment lines, "p cnf N M", then clauses of three nonzero
// literals terminated by 0 (clauses may span lines). Clause arity other than
// three or a repeated variable throws ValidationError; a missing header or a
// header/clause count mismatch throws ParseError.
CnfFormula parse_dimacs_cnf(std::istream& in);
CnfFormula parse_dimacs_cnf(std::string_view text);
CnfFormula read_dimacs_file(const std::string& path);
void write_dimacs_cnf(std::ostream& out, const CnfFormula& f);

// assignment[i] is the value of variable i+1.
using Assignment = std::vector<bool>;

bool satisfies(const CnfFormula& f, const Assignment& assignment);

struct SatResult {
  bool satisfiable = false;
  std::optional<Assignment> assignment;
};

inline constexpr int kMaxBruteForceVariables = 25;

// Truth-table search in binary-counter order (variable 1 is the low bit);
// returns the first satisfying assignment. Throws ResourceError when
// N > kMaxBruteForceVariables.
SatResult sat_brute_force(const CnfFormula& f);

}  // namespace errold
