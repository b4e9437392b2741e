// Exact two-phase dense simplex with Bland's rule.

#pragma once

#include "ltireach/linalg/dense.hpp"

#include <optional>
#include <vector>

namespace ltireach {

enum class Relation { LessEq, GreaterEq, Equal };

/// coeffs . x  (rel)  rhs
struct LinearConstraint {
  RatVector coeffs;
  Relation rel;
  Rat rhs;
};

struct LinearProgram {
  int num_vars = 0;
  /// Variables are nonnegative unless marked free.
  std::vector<bool> free_var;
  std::vector<LinearConstraint> constraints;
  /// Maximized when present; otherwise only feasibility is decided.
  std::optional<RatVector> objective;

  explicit LinearProgram(int n = 0) : num_vars(n), free_var(static_cast<std::size_t>(n), false) {}

  int add_var(bool is_free = false);
  void add(RatVector coeffs, Relation rel, Rat rhs);
  /// Sparse helper: pairs (variable, coefficient).
  void add_sparse(const std::vector<std::pair<int, Rat>>& terms, Relation rel, Rat rhs);
};

enum class LpStatus { Infeasible, Optimal, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rat value;         // objective value at the optimum (0 for pure feasibility)
  RatVector point;   // primal solution
  RatVector duals;   // one multiplier per constraint (optimal status only)

  bool feasible() const { return status != LpStatus::Infeasible; }
};

LpResult lp_solve(const LinearProgram& lp);

/// Checks the optimality certificate of a result against its program:
/// primal feasibility, dual feasibility and equal objective values.
bool verify_lp_optimality(const LinearProgram& lp, const LpResult& r);

}  // namespace ltireach
