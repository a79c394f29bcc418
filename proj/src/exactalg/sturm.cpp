#include "patchpencil/exactalg/sturm.h"

#include <algorithm>

#include "patchpencil/error.h"

namespace patchpencil::exactalg {

bool operator<(const Bound& a, const Bound& b) {
  if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) < static_cast<int>(b.kind_);
  return a.finite() && a.value_ < b.value_;
}

int sign_at(const UniPoly& p, const Bound& x) {
  if (p.is_zero()) return 0;
  switch (x.kind()) {
    case Bound::Kind::PosInf:
      return sign(p.lc());
    case Bound::Kind::NegInf:
      return p.degree() % 2 == 0 ? sign(p.lc()) : -sign(p.lc());
    case Bound::Kind::Finite:
      break;
  }
  return p.sign_at(x.value());
}

std::vector<UniPoly> sturm_chain(const UniPoly& p) {
  std::vector<UniPoly> chain;
  if (p.is_zero()) return chain;
  auto normalize = [](const UniPoly& q) { return q * (Rat(1) / abs(q.lc())); };
  chain.push_back(normalize(p));
  UniPoly d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(normalize(d));
  while (true) {
    UniPoly r = -rem(chain[chain.size() - 2], chain.back());
    if (r.is_zero()) break;
    chain.push_back(normalize(r));
  }
  return chain;
}

int sign_variations(const std::vector<UniPoly>& chain, const Bound& x) {
  int changes = 0, last = 0;
  for (const auto& q : chain) {
    const int s = sign_at(q, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int sturm_count(const UniPoly& p, const Bound& lo, const Bound& hi) {
  if (p.is_zero()) fail(ErrorKind::Precondition, "indeterminate root count");
  if (!(lo < hi)) fail(ErrorKind::Precondition, "sturm_count requires lo < hi");
  // On a squarefree polynomial the variation difference counts roots in (lo, hi].
  const auto chain = sturm_chain(squarefree_part(p));
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

Rat cauchy_bound(const UniPoly& p) {
  if (p.is_zero()) fail(ErrorKind::Precondition, "root bound of the zero polynomial");
  Rat m(0);
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rat(abs(p[i] / p.lc())));
  return m + 1;
}

std::vector<MultiplicityClass> squarefree_mult_structure(const UniPoly& p) {
  std::vector<MultiplicityClass> out;
  const auto factors = yun_factors(p);
  for (std::size_t m = 0; m < factors.size(); ++m) {
    if (factors[m].degree() <= 0) continue;
    out.push_back({static_cast<int>(m) + 1, factors[m].degree(), real_root_count(factors[m])});
  }
  return out;
}

}  // namespace patchpencil::exactalg
