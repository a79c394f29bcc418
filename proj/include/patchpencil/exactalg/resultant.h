#pragma once

#include <vector>

#include "patchpencil/exactalg/bipoly.h"
#include "patchpencil/exactalg/unipoly.h"

namespace patchpencil::exactalg {

/// A polynomial in Y with coefficients in Q[X]; element j is the
/// coefficient of Y^j, no trailing zeros.
using YPoly = std::vector<UniPoly>;

/// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b over Q[X][Y].
YPoly pseudo_remainder(const YPoly& a, const YPoly& b);

/// Res_Y(p, q) via the subresultant remainder sequence. Agrees with the
/// Sylvester determinant (rows of p first). Zero iff p and q share a factor
/// of positive Y-degree.
UniPoly resultant_y(const BiPoly& p, const BiPoly& q);
UniPoly resultant_y(const YPoly& p, const YPoly& q);

/// Disc_Y(p) = (-1)^(D(D-1)/2) Res_Y(p, dp/dY) / lc_Y(p), D = deg_Y p >= 1.
UniPoly discriminant_y(const BiPoly& p);

}  // namespace patchpencil::exactalg
