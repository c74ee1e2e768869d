#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "arbor/rational.hpp"

namespace arbor {

enum class Relation { less_equal, equal, greater_equal };

struct LinearConstraint {
  std::vector<Rational> coefficients;  // one per variable
  Relation relation = Relation::less_equal;
  Rational rhs;
};

/// maximize objective·x subject to the constraints. Variables are nonnegative
/// unless flagged in `free_variables`.
struct LinearProgram {
  std::size_t variable_count = 0;
  std::vector<Rational> objective;
  std::vector<LinearConstraint> constraints;
  std::vector<bool> free_variables;  // empty means all nonnegative

  /// Appends a constraint; throws InputError on a dimension mismatch.
  void add(std::vector<Rational> coefficients, Relation relation, Rational rhs);
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  Rational value;              // meaningful when optimal
  std::vector<Rational> point; // meaningful when optimal
};

/// Exact two-phase tableau simplex with Bland's smallest-index rule.
LpSolution simplex_solve(const LinearProgram& lp);

/// Feasible region solved once, then optimized for several objectives. Each
/// call starts from the basis the previous one ended in.
class SimplexEngine {
 public:
  /// Runs phase one on the constraints of `lp`; its objective is ignored.
  explicit SimplexEngine(const LinearProgram& lp);
  ~SimplexEngine();
  SimplexEngine(SimplexEngine&&) noexcept;
  SimplexEngine& operator=(SimplexEngine&&) noexcept;

  bool feasible() const noexcept;
  /// Maximizes objective·x; reports infeasible when the region is empty.
  LpSolution maximize(const std::vector<Rational>& objective);

 private:
  struct State;
  std::unique_ptr<State> state_;
};

}  // namespace arbor
