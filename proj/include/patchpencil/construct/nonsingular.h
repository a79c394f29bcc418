#pragma once

#include <array>
#include <optional>
#include <string>

#include "patchpencil/exactalg/bipoly.h"

namespace patchpencil::construct {

enum class Smoothness { Nonsingular, Singular, Inconclusive };

std::string to_string(Smoothness s);

struct NonsingularVerdict {
  Smoothness outcome = Smoothness::Inconclusive;
  /// Affine chart in which the evidence was found: "Z=1", "X=1" or "Y=1".
  std::string chart;
  /// Human-readable description of the singular locus or of the failure.
  std::string detail;
  /// Homogeneous coordinates [X:Y:Z] when the singular point is rational.
  std::optional<std::array<exactalg::Rat, 3>> point;
};

/// Decides smoothness of the projective closure of {p = 0} in CP^2, using
/// the degree-D homogenization (D >= total degree of p). In each of the
/// three standard charts, candidate X-values of singular points are the
/// roots of gcd(Res_Y(f, f_Y), Res_Y(f, f_X)); each candidate is then
/// settled exactly by dynamic evaluation over the complex roots.
NonsingularVerdict verify_nonsingular(const exactalg::BiPoly& p, int D, long split_budget = 256);

}  // namespace patchpencil::construct
