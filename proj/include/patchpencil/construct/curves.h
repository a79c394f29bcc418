#pragma once

#include <optional>
#include <string>
#include <vector>

#include "patchpencil/exactalg/bipoly.h"

namespace patchpencil::construct {

using exactalg::BiPoly;
using exactalg::Rat;

struct ConstructionParams {
  int d = 3;
  /// floor(d/2) strictly increasing positive roots of the branch parabolas.
  std::vector<Rat> alphas;
  /// Verified as given when present, searched for otherwise.
  std::optional<Rat> epsilon;
  /// Candidate x-positions for the all-real fiber, tried in order.
  std::vector<Rat> a_grid;
};

/// alphas 1..k and the grid {1, 2, alpha_k + 1, 4 alpha_k}.
ConstructionParams default_params(int d);

/// Fills a missing grid with the default; throws Precondition on bad values.
void validate(ConstructionParams& p, int min_d = 3);

/// prod (Y^2 - alpha_i X), times Y when d is odd.
BiPoly build_csing(const ConstructionParams& p);

/// The unsingular perturbation C_sing + eps (Y^d + X - X^(d-1)).
BiPoly perturb(const BiPoly& csing, int d, const Rat& eps);

/// X^d P(X, Y/X): the monomial map (i, j) -> (i + d - j, j).
BiPoly tilde_transform(const BiPoly& p, int d);

struct StandardPiece {
  std::string label;
  BiPoly poly;
  /// The fiber X = tangency_x meets the curve in a single point of multiplicity d.
  Rat tangency_x;
};

/// P1 = Y^d + X + 1, P2 = Y^d - X^(d-1) + X^d, P3 = Y^d + X^d + X^(d+1),
/// P4 = Y^d - X^(2d-1) + X^(2d).
std::vector<StandardPiece> standard_pieces(int d);

}  // namespace patchpencil::construct
