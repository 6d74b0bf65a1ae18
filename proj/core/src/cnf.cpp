#include "errold/cnf.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "errold/errors.hpp"

namespace errold {
namespace {

std::optional<long long> parse_int(std::string_view token) {
  long long value = 0;
  const char* begin = token.data();
  if (!token.empty() && token.front() == '+') return std::nullopt;
  const auto [ptr, ec] = std::from_chars(begin, token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

void check_clause(const Clause& c, int num_variables, int clause_no) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].variable < 1 || c[i].variable > num_variables) {
      throw ValidationError("clause " + std::to_string(clause_no) + ": variable " + std::to_string(c[i].variable) +
                            " outside 1.." + std::to_string(num_variables));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (c[i].variable == c[j].variable) {
        throw ValidationError("clause " + std::to_string(clause_no) + ": variable " + std::to_string(c[i].variable) +
                              " repeated");
      }
    }
  }
}

}  // namespace

void validate(const CnfFormula& f) {
  if (f.num_variables < 0) throw ValidationError("negative variable count");
  for (std::size_t j = 0; j < f.clauses.size(); ++j) check_clause(f.clauses[j], f.num_variables, static_cast<int>(j) + 1);
}

CnfFormula parse_dimacs_cnf(std::istream& in) {
  CnfFormula f;
  std::optional<long long> declared_clauses;
  std::vector<Literal> pending;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto start = line.find_first_not_of(" \t");
    if (start == std::string_view::npos) continue;
    line = line.substr(start);
    if (line.front() == 'c') continue;
    if (line.front() == '%') break;
    std::istringstream tokens{std::string(line)};
    if (line.front() == 'p') {
      if (declared_clauses) throw ParseError(line_no, "duplicate problem line");
      std::string p, format, vars, clauses, extra;
      tokens >> p >> format >> vars >> clauses;
      const auto nv = parse_int(vars);
      const auto nc = parse_int(clauses);
      if (p != "p" || format != "cnf" || !nv || !nc || *nv < 0 || *nc < 0 || (tokens >> extra)) {
        throw ParseError(line_no, "expected \"p cnf <variables> <clauses>\"");
      }
      f.num_variables = static_cast<int>(*nv);
      declared_clauses = *nc;
      continue;
    }
    if (!declared_clauses) throw ParseError(line_no, "clause before \"p cnf\" header");
    std::string token;
    while (tokens >> token) {
      const auto lit = parse_int(token);
      if (!lit) throw ParseError(line_no, "bad literal '" + token + "'");
      if (*lit == 0) {
        const int clause_no = f.num_clauses() + 1;
        if (pending.size() != 3) {
          throw ValidationError("clause " + std::to_string(clause_no) + " has " + std::to_string(pending.size()) +
                                " literals, expected 3");
        }
        Clause c{pending[0], pending[1], pending[2]};
        check_clause(c, f.num_variables, clause_no);
        f.clauses.push_back(c);
        pending.clear();
        continue;
      }
      if (std::llabs(*lit) > f.num_variables) {
        throw ValidationError("line " + std::to_string(line_no) + ": variable " + std::to_string(std::llabs(*lit)) +
                              " outside 1.." + std::to_string(f.num_variables));
      }
      pending.push_back({static_cast<int>(std::llabs(*lit)), *lit > 0});
    }
  }
  if (!declared_clauses) throw ParseError(0, "missing \"p cnf\" header");
  if (!pending.empty()) throw ParseError(line_no, "unterminated clause at end of input");
  if (*declared_clauses != f.num_clauses()) {
    throw ParseError(0, "header declares " + std::to_string(*declared_clauses) + " clauses, found " +
                            std::to_string(f.num_clauses()));
  }
  return f;
}

CnfFormula parse_dimacs_cnf(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dimacs_cnf(in);
}

CnfFormula read_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("file-not-found: " + path);
  return parse_dimacs_cnf(in);
}

void write_dimacs_cnf(std::ostream& out, const CnfFormula& f) {
  out << "p cnf " << f.num_variables << ' ' << f.num_clauses() << '\n';
  for (const Clause& c : f.clauses) {
    for (const Literal& l : c) out << (l.positive ? "" : "-") << l.variable << ' ';
    out << "0\n";
  }
}

bool satisfies(const CnfFormula& f, const Assignment& assignment) {
  for (const Clause& c : f.clauses) {
    bool any = false;
    for (const Literal& l : c) any = any || assignment[static_cast<std::size_t>(l.variable - 1)] == l.positive;
    if (!any) return false;
  }
  return true;
}

SatResult sat_brute_force(const CnfFormula& f) {
  if (f.num_variables > kMaxBruteForceVariables) {
    throw ResourceError("brute-force SAT supports at most " + std::to_string(kMaxBruteForceVariables) +
                        " variables, got " + std::to_string(f.num_variables));
  }
  // Clause j is satisfied by assignment bits `bits` iff (bits & pos) | (~bits & neg) != 0.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> masks;
  for (const Clause& c : f.clauses) {
    std::uint32_t pos = 0, neg = 0;
    for (const Literal& l : c) (l.positive ? pos : neg) |= 1U << (l.variable - 1);
    masks.emplace_back(pos, neg);
  }
  const std::uint64_t limit = std::uint64_t{1} << f.num_variables;
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    const auto b = static_cast<std::uint32_t>(bits);
    bool ok = true;
    for (const auto& [pos, neg] : masks) {
      if (((b & pos) | (~b & neg)) == 0) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    Assignment a(static_cast<std::size_t>(f.num_variables));
    for (int i = 0; i < f.num_variables; ++i) a[static_cast<std::size_t>(i)] = (b >> i) & 1U;
    return {true, std::move(a)};
  }
  return {false, std::nullopt};
}

}  // namespace errold
