#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace errold {

// Malformed text input. `line` is 1-based; 0 when no single line is at fault.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// Well-formed input that violates a structural rule (self-loop, duplicate
// edge, repeated variable in a clause, ...).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computation bound was exceeded (vertex count too large for exhaustive
// search, node budget spent, ...).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Node budget exhausted inside the solver. Carries the best cardinality
// found before giving up, if any.
class BudgetExhausted : public ResourceError {
 public:
  BudgetExhausted(const std::string& what, std::optional<int> best_bound)
      : ResourceError(what), best_bound_(best_bound) {}

  std::optional<int> best_bound() const { return best_bound_; }

 private:
  std::optional<int> best_bound_;
};

}  // namespace errold
