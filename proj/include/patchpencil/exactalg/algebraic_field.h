#pragma once

#include <vector>

#include "patchpencil/exactalg/algebraic.h"
#include "patchpencil/exactalg/bipoly.h"
#include "patchpencil/exactalg/sturm.h"

namespace patchpencil::exactalg {

/// Arithmetic in Q(alpha) for one real algebraic number alpha, by dynamic
/// evaluation: elements are polynomials reduced modulo a squarefree q with
/// q(alpha) = 0, and every zero test that splits q keeps the factor that
/// vanishes at alpha. Zero tests are exact; signs of nonzero elements come
/// from rational interval evaluation on a refined isolating interval.
class RealRootField {
 public:
  explicit RealRootField(const AlgebraicNumber& alpha, long refine_budget = 4096);

  const AlgebraicNumber& point() const { return alpha_; }
  const UniPoly& modulus() const { return alpha_.defining(); }

  UniPoly reduce(const UniPoly& f) const;
  UniPoly mul(const UniPoly& a, const UniPoly& b) const { return reduce(a * b); }
  bool is_zero(const UniPoly& f);
  int sign(const UniPoly& f);
  /// Inverse of an element that does not vanish at alpha.
  UniPoly inverse(const UniPoly& f);

 private:
  AlgebraicNumber alpha_;
  long budget_;
};

/// Polynomial in Y over Q(alpha): element j is the coefficient of Y^j.
using FieldPoly = std::vector<UniPoly>;

/// Multiplicity structure of the fiber polynomial P(alpha, Y), computed over
/// Q(alpha) (Yun decomposition plus a Sturm count per squarefree factor).
/// Agrees with squarefree_mult_structure(P.at_x(alpha)) at rational alpha.
std::vector<MultiplicityClass> fiber_mult_structure(const BiPoly& p, const AlgebraicNumber& alpha,
                                                    long refine_budget = 4096);

}  // namespace patchpencil::exactalg
