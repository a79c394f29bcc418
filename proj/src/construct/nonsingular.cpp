#include "patchpencil/construct/nonsingular.h"

#include "patchpencil/error.h"
#include "patchpencil/exactalg/common_roots.h"
#include "patchpencil/exactalg/resultant.h"

namespace patchpencil::construct {

using exactalg::BiPoly;
using exactalg::Exponent;
using exactalg::Rat;
using exactalg::UniPoly;

std::string to_string(Smoothness s) {
  switch (s) {
    case Smoothness::Nonsingular: return "nonsingular";
    case Smoothness::Singular: return "singular";
    case Smoothness::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

namespace {

struct Chart {
  std::string name;
  BiPoly f;  // in chart coordinates (u, v)
  // Maps chart coordinates back to [X:Y:Z].
  std::array<Rat, 3> (*embed)(const Rat& u, const Rat& v);
};

// Single root of a linear polynomial.
std::optional<Rat> linear_root(const UniPoly& p) {
  if (p.degree() != 1) return std::nullopt;
  return Rat(-p[0] / p[1]);
}

NonsingularVerdict singular(const Chart& c, std::string detail, std::optional<std::array<Rat, 3>> pt = {}) {
  return {Smoothness::Singular, c.name, std::move(detail), std::move(pt)};
}

// nullopt when the chart holds no singular point.
std::optional<NonsingularVerdict> check_chart(const Chart& c, long budget) {
  const BiPoly& f = c.f;
  if (f.total_degree() <= 0) return std::nullopt;
  const BiPoly fu = f.diff_x(), fv = f.diff_y();

  if (f.degree_y() == 0) {
    // f depends on u alone: singular along every repeated vertical line.
    const UniPoly g = f.lc_y();
    if (exactalg::gcd(g, g.derivative()).degree() > 0) return singular(c, "repeated vertical line component");
    return std::nullopt;
  }
  const UniPoly r1 = exactalg::resultant_y(f, fv);
  if (r1.is_zero()) return singular(c, "repeated component");
  UniPoly cand = r1;
  if (!fu.is_zero()) {
    const UniPoly r2 = exactalg::resultant_y(f, fu);
    if (!r2.is_zero()) cand = exactalg::gcd(r1, r2);
  }
  if (cand.degree() <= 0) return std::nullopt;
  const auto branches = exactalg::common_root_branches(exactalg::squarefree_part(cand), {f, fu, fv}, budget);
  if (branches.empty()) return std::nullopt;
  const auto& b = branches.front();
  if (b.y_gcd.empty()) return singular(c, "singular along the fiber " + b.x_poly.to_string('u') + " = 0");
  const auto u = linear_root(b.x_poly);
  std::optional<Rat> v;
  if (u && b.y_gcd.size() == 2) v = Rat(-b.y_gcd[0][0] / b.y_gcd[1][0]);
  if (u && v) return singular(c, "singular point", c.embed(*u, *v));
  return singular(c, "singular point over the roots of " + b.x_poly.to_string('u'));
}

}  // namespace

NonsingularVerdict verify_nonsingular(const BiPoly& p, int D, long split_budget) {
  if (p.is_zero()) fail(ErrorKind::Precondition, "smoothness of the zero polynomial");
  if (D < p.total_degree()) fail(ErrorKind::Precondition, "homogenization degree below the total degree");
  std::vector<Chart> charts{
      {"Z=1", p, [](const Rat& u, const Rat& v) { return std::array<Rat, 3>{u, v, Rat(1)}; }},
      {"X=1", p.map_exponents([D](Exponent e) { return Exponent{e.second, D - e.first - e.second}; }),
       [](const Rat& u, const Rat& v) { return std::array<Rat, 3>{Rat(1), u, v}; }},
      {"Y=1", p.map_exponents([D](Exponent e) { return Exponent{e.first, D - e.first - e.second}; }),
       [](const Rat& u, const Rat& v) { return std::array<Rat, 3>{u, Rat(1), v}; }},
  };
  for (const auto& c : charts) {
    try {
      if (auto v = check_chart(c, split_budget)) return *v;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Inconclusive) throw;
      return {Smoothness::Inconclusive, c.name, e.what(), std::nullopt};
    }
  }
  return {Smoothness::Nonsingular, "", "no singular point in any chart", std::nullopt};
}

}  // namespace patchpencil::construct
