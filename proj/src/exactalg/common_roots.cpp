#include "patchpencil/exactalg/common_roots.h"

#include <optional>
#include <utility>

#include "patchpencil/error.h"

namespace patchpencil::exactalg {

namespace {

using ModPoly = std::vector<UniPoly>;

struct Splitter {
  long budget;

  void charge() {
    if (budget-- <= 0) fail(ErrorKind::Inconclusive, "common-root splitting budget exhausted");
  }

  /// Drops leading coefficients that vanish mod q. Returns a proper factor of
  /// q when the leading coefficient vanishes on part of its roots only.
  static std::optional<UniPoly> normalize(const UniPoly& q, ModPoly& p) {
    while (!p.empty()) {
      UniPoly c = rem(p.back(), q);
      if (c.is_zero()) {
        p.pop_back();
        continue;
      }
      UniPoly g = gcd(c, q);
      if (g.degree() > 0) return g;
      p.back() = std::move(c);
      break;
    }
    for (auto& c : p) c = rem(c, q);
    return std::nullopt;
  }

  void gcd_branches(const UniPoly& q, ModPoly a, ModPoly b, std::vector<CommonRootBranch>& sink) {
    while (true) {
      for (ModPoly* p : {&a, &b}) {
        if (auto g = normalize(q, *p)) {
          charge();
          gcd_branches(*g, a, b, sink);
          gcd_branches(exact_div(q, *g), a, b, sink);
          return;
        }
      }
      if (b.empty() || a.empty()) {
        ModPoly g = b.empty() ? a : b;
        if (!g.empty()) {
          const UniPoly inv = gcd_inverse(g.back(), q).second;
          for (auto& c : g) c = rem(c * inv, q);
        }
        sink.push_back({q, std::move(g)});
        return;
      }
      if (a.size() < b.size()) std::swap(a, b);
      const UniPoly inv = gcd_inverse(b.back(), q).second;
      const UniPoly f = rem(a.back() * inv, q);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = rem(a[shift + j] - f * b[j], q);
      a.pop_back();
    }
  }
};

}  // namespace

std::vector<CommonRootBranch> common_root_branches(const UniPoly& q, const std::vector<BiPoly>& polys,
                                                   long split_budget) {
  if (q.degree() < 1 || polys.empty()) return {};
  Splitter s{split_budget};
  std::vector<CommonRootBranch> current{{squarefree_part(q), polys.front().y_coeffs()}};
  for (std::size_t k = 1; k < polys.size(); ++k) {
    std::vector<CommonRootBranch> next;
    for (auto& br : current) s.gcd_branches(br.x_poly, br.y_gcd, polys[k].y_coeffs(), next);
    current = std::move(next);
  }
  if (polys.size() == 1) {
    std::vector<CommonRootBranch> next;
    for (auto& br : current) s.gcd_branches(br.x_poly, br.y_gcd, {}, next);
    current = std::move(next);
  }
  std::vector<CommonRootBranch> nontrivial;
  for (auto& br : current)
    if (br.y_gcd.size() != 1) nontrivial.push_back(std::move(br));
  return nontrivial;
}

}  // namespace patchpencil::exactalg
