#pragma once

#include <vector>

#include "patchpencil/exactalg/bipoly.h"
#include "patchpencil/exactalg/unipoly.h"

namespace patchpencil::exactalg {

/// A set of (complex) X-values, the roots of x_poly, over which the given
/// polynomials have the common Y-factor y_gcd (coefficients reduced modulo
/// x_poly; an empty y_gcd means every polynomial vanishes on the whole fiber).
struct CommonRootBranch {
  UniPoly x_poly;
  std::vector<UniPoly> y_gcd;
};

/// For a squarefree q, partitions the complex roots of q by dynamic
/// evaluation (splitting q at every ambiguous zero test) and returns the
/// branches on which gcd_Y(P_1(x, Y), ..., P_n(x, Y)) is non-constant.
/// Throws ErrorKind::Inconclusive when more than `split_budget` splits occur.
std::vector<CommonRootBranch> common_root_branches(const UniPoly& q, const std::vector<BiPoly>& polys,
                                                   long split_budget = 256);

}  // namespace patchpencil::exactalg
