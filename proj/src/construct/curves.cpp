#include "patchpencil/construct/curves.h"

#include <algorithm>

#include "patchpencil/error.h"

namespace patchpencil::construct {

using exactalg::Exponent;

namespace {

BiPoly mono(const Rat& c, int i, int j) { return BiPoly::monomial(c, i, j); }

}  // namespace

ConstructionParams default_params(int d) {
  ConstructionParams p;
  p.d = d;
  for (int i = 1; i <= d / 2; ++i) p.alphas.emplace_back(i);
  validate(p, 2);
  return p;
}

void validate(ConstructionParams& p, int min_d) {
  if (p.d < min_d) fail(ErrorKind::Precondition, "degree d must be at least " + std::to_string(min_d));
  if (static_cast<int>(p.alphas.size()) != p.d / 2)
    fail(ErrorKind::Precondition, "expected " + std::to_string(p.d / 2) + " alphas for d = " + std::to_string(p.d));
  for (std::size_t i = 0; i < p.alphas.size(); ++i) {
    if (p.alphas[i] <= 0) fail(ErrorKind::Precondition, "alphas must be positive");
    if (i > 0 && p.alphas[i] <= p.alphas[i - 1]) fail(ErrorKind::Precondition, "alphas must strictly increase");
  }
  if (p.epsilon && *p.epsilon <= 0) fail(ErrorKind::Precondition, "epsilon must be positive");
  if (p.a_grid.empty()) {
    const Rat top = p.alphas.empty() ? Rat(1) : p.alphas.back();
    for (const Rat& a : {Rat(1), Rat(2), Rat(top + 1), Rat(4 * top)})
      if (std::find(p.a_grid.begin(), p.a_grid.end(), a) == p.a_grid.end()) p.a_grid.push_back(a);
  }
  for (const auto& a : p.a_grid)
    if (a <= 0) fail(ErrorKind::Precondition, "a-grid entries must be positive");
}

BiPoly build_csing(const ConstructionParams& params) {
  ConstructionParams p = params;
  validate(p, 2);
  BiPoly out = p.d % 2 ? mono(1, 0, 1) : mono(1, 0, 0);
  for (const auto& alpha : p.alphas) out = out * (mono(1, 0, 2) - mono(alpha, 1, 0));
  return out;
}

BiPoly perturb(const BiPoly& csing, int d, const Rat& eps) {
  return csing + eps * (mono(1, 0, d) + mono(1, 1, 0) - mono(1, d - 1, 0));
}

BiPoly tilde_transform(const BiPoly& p, int d) {
  return p.map_exponents([d](Exponent e) { return Exponent{e.first + d - e.second, e.second}; });
}

std::vector<StandardPiece> standard_pieces(int d) {
  if (d < 3) fail(ErrorKind::Precondition, "standard pieces need d >= 3");
  const BiPoly yd = mono(1, 0, d);
  return {
      {"P1", yd + mono(1, 1, 0) + mono(1, 0, 0), Rat(-1)},
      {"P2", yd - mono(1, d - 1, 0) + mono(1, d, 0), Rat(1)},
      {"P3", yd + mono(1, d, 0) + mono(1, d + 1, 0), Rat(-1)},
      {"P4", yd - mono(1, 2 * d - 1, 0) + mono(1, 2 * d, 0), Rat(1)},
  };
}

}  // namespace patchpencil::construct
