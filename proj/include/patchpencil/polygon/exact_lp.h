#pragma once

#include <vector>

#include "patchpencil/exactalg/rational.h"

namespace patchpencil::polygon {

enum class Relation { LessEq, GreaterEq, Equal };

struct LinearConstraint {
  std::vector<exactalg::Rat> coeffs;
  Relation relation = Relation::LessEq;
  exactalg::Rat rhs = 0;
};

/// maximize objective . x subject to constraints and x >= 0.
struct LinearProgram {
  std::size_t num_vars = 0;
  std::vector<LinearConstraint> constraints;
  std::vector<exactalg::Rat> objective;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  std::vector<exactalg::Rat> x;
  exactalg::Rat value = 0;
};

/// Two-phase tableau simplex over Q with Bland's anti-cycling rule.
LpSolution maximize(const LinearProgram& lp);

}  // namespace patchpencil::polygon
