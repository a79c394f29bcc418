#pragma once

#include <map>

#include "patchpencil/polygon/subdivision.h"

namespace patchpencil::polygon {

struct RegularityResult {
  bool regular = false;
  /// Heights at every cell vertex; empty when not regular.
  std::map<LatticePoint, exactalg::Rat> heights;
  /// Optimal strict-convexity margin (capped at 1); nonpositive when not regular.
  exactalg::Rat margin = 0;
};

/// Decides whether the cells are exactly the domains of linearity of a
/// convex piecewise-linear function, by maximizing the bend margin across
/// every interior edge in an exact linear program.
RegularityResult is_regular(const Subdivision& s);

/// Affine function through the lifted vertices of a cell, evaluated at p.
/// Uses the first three non-collinear vertices.
exactalg::Rat lifted_value(const Polygon& cell, const std::map<LatticePoint, exactalg::Rat>& heights,
                           const LatticePoint& p);

}  // namespace patchpencil::polygon
