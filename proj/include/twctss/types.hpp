#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace twctss {

using NodeId = std::int32_t;
using NodeSet = std::vector<NodeId>;  // sorted ascending, no duplicates
using Round = std::int32_t;

inline constexpr Round kNever = -1;

/// Costs in the dynamic programs. kInfinity marks infeasible cells; use
/// add_costs() so infeasibility is absorbing.
using Cost = std::int64_t;
inline constexpr Cost kInfinity = std::numeric_limits<Cost>::max() / 4;

constexpr Cost add_costs(Cost a, Cost b) {
  if (a >= kInfinity || b >= kInfinity) return kInfinity;
  const Cost s = a + b;
  return s >= kInfinity ? kInfinity : s;
}

/// Thrown for malformed text/JSON input. Carries the 1-based line number when
/// known (0 otherwise).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what
                                : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A solver was asked to handle a graph that does not have its shape.
class ShapeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A cross-check failed (e.g. a solver witness that does not influence V).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Result shared by every exact solver.
struct SolveResult {
  std::int64_t size = 0;
  NodeSet witness;
  Round completion_round = 0;
  std::string method;
};

}  // namespace twctss
