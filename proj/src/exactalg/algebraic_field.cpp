#include "patchpencil/exactalg/algebraic_field.h"

#include <utility>

#include "patchpencil/error.h"

namespace patchpencil::exactalg {

namespace {

int closed_count(const UniPoly& s, const Rat& lo, const Rat& hi) {
  if (lo == hi) return s.sign_at(lo) == 0 ? 1 : 0;
  return sturm_count(s, lo, hi) + (s.sign_at(lo) == 0 ? 1 : 0);
}

}  // namespace

RealRootField::RealRootField(const AlgebraicNumber& alpha, long refine_budget)
    : alpha_(alpha), budget_(refine_budget) {
  if (auto r = alpha.as_rational()) alpha_ = AlgebraicNumber::rational(*r);
}

UniPoly RealRootField::reduce(const UniPoly& f) const { return rem(f, modulus()); }

bool RealRootField::is_zero(const UniPoly& f) {
  const UniPoly r = reduce(f);
  if (r.is_zero()) return true;
  const UniPoly g = gcd(r, modulus());
  if (g.degree() == 0) return false;
  if (closed_count(g, alpha_.lo(), alpha_.hi()) == 1) {
    alpha_ = AlgebraicNumber(g, alpha_.lo(), alpha_.hi());
    return true;
  }
  alpha_ = AlgebraicNumber(exact_div(modulus(), g), alpha_.lo(), alpha_.hi());
  return false;
}

int RealRootField::sign(const UniPoly& f) {
  if (is_zero(f)) return 0;
  const UniPoly r = reduce(f);
  while (true) {
    const auto [lo, hi] = eval_range(r, alpha_.lo(), alpha_.hi());
    if (lo > 0) return 1;
    if (hi < 0) return -1;
    if (budget_-- <= 0) fail(ErrorKind::Inconclusive, "refine: sign determination budget exhausted");
    alpha_ = alpha_.bisected();
  }
}

UniPoly RealRootField::inverse(const UniPoly& f) {
  if (is_zero(f)) fail(ErrorKind::Precondition, "inverse of zero in Q(alpha)");
  auto [g, u] = gcd_inverse(reduce(f), modulus());
  if (g.degree() != 0) fail(ErrorKind::Precondition, "element not invertible in Q(alpha)");
  return u;
}

namespace {

void trim(RealRootField& k, FieldPoly& p) {
  while (!p.empty() && k.is_zero(p.back())) p.pop_back();
  for (auto& c : p) c = k.reduce(c);
}

int deg(const FieldPoly& p) { return static_cast<int>(p.size()) - 1; }

FieldPoly derivative(const FieldPoly& p) {
  FieldPoly out;
  for (std::size_t j = 1; j < p.size(); ++j) out.push_back(p[j] * Rat(static_cast<long>(j)));
  return out;
}

FieldPoly sub(RealRootField& k, const FieldPoly& a, const FieldPoly& b) {
  FieldPoly out(std::max(a.size(), b.size()));
  for (std::size_t j = 0; j < out.size(); ++j) {
    UniPoly v = j < a.size() ? a[j] : UniPoly{};
    if (j < b.size()) v -= b[j];
    out[j] = std::move(v);
  }
  trim(k, out);
  return out;
}

FieldPoly scale(RealRootField& k, const FieldPoly& a, const UniPoly& c) {
  FieldPoly out;
  for (const auto& x : a) out.push_back(k.mul(x, c));
  trim(k, out);
  return out;
}

/// Division with remainder; both trimmed, b nonzero.
std::pair<FieldPoly, FieldPoly> divmod(RealRootField& k, FieldPoly a, const FieldPoly& b) {
  if (b.empty()) fail(ErrorKind::Precondition, "division by zero in Q(alpha)[Y]");
  const UniPoly inv = k.inverse(b.back());
  FieldPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (!a.empty() && deg(a) >= deg(b)) {
    const int shift = deg(a) - deg(b);
    const UniPoly f = k.mul(a.back(), inv);
    q[static_cast<std::size_t>(shift)] = f;
    for (std::size_t j = 0; j < b.size(); ++j)
      a[static_cast<std::size_t>(shift) + j] = k.reduce(a[static_cast<std::size_t>(shift) + j] - f * b[j]);
    a.pop_back();
    trim(k, a);
  }
  trim(k, q);
  return {std::move(q), std::move(a)};
}

FieldPoly monic(RealRootField& k, const FieldPoly& a) {
  if (a.empty()) return a;
  return scale(k, a, k.inverse(a.back()));
}

FieldPoly gcd(RealRootField& k, FieldPoly a, FieldPoly b) {
  trim(k, a);
  trim(k, b);
  while (!b.empty()) {
    auto r = divmod(k, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(k, a);
}

FieldPoly exact_div(RealRootField& k, const FieldPoly& a, const FieldPoly& b) {
  auto [q, r] = divmod(k, a, b);
  if (!r.empty()) fail(ErrorKind::Precondition, "inexact division in Q(alpha)[Y]");
  return q;
}

int sign_at_infinity(RealRootField& k, const FieldPoly& p, bool positive) {
  const int s = k.sign(p.back());
  return positive || deg(p) % 2 == 0 ? s : -s;
}

int real_root_count(RealRootField& k, const FieldPoly& s) {
  if (deg(s) < 1) return 0;
  std::vector<FieldPoly> chain{s};
  FieldPoly d = derivative(s);
  trim(k, d);
  if (!d.empty()) chain.push_back(d);
  while (chain.size() >= 2) {
    FieldPoly r = divmod(k, chain[chain.size() - 2], chain.back()).second;
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  auto variations = [&](bool positive) {
    int changes = 0, last = 0;
    for (const auto& q : chain) {
      const int v = sign_at_infinity(k, q, positive);
      if (last != 0 && v != last) ++changes;
      last = v;
    }
    return changes;
  };
  return variations(false) - variations(true);
}

}  // namespace

std::vector<MultiplicityClass> fiber_mult_structure(const BiPoly& p, const AlgebraicNumber& alpha,
                                                    long refine_budget) {
  RealRootField k(alpha, refine_budget);
  FieldPoly f = p.y_coeffs();
  trim(k, f);
  if (f.empty()) fail(ErrorKind::Precondition, "fiber polynomial vanishes identically");
  std::vector<MultiplicityClass> out;
  if (deg(f) == 0) return out;

  // Yun's algorithm over Q(alpha).
  const FieldPoly df = derivative(f);
  const FieldPoly a0 = gcd(k, f, df);
  FieldPoly b = exact_div(k, f, a0);
  FieldPoly c = exact_div(k, df, a0);
  FieldPoly d = sub(k, c, derivative(b));
  int m = 1;
  while (deg(b) > 0) {
    FieldPoly a = gcd(k, b, d);
    if (deg(a) > 0) out.push_back({m, deg(a), real_root_count(k, a)});
    b = exact_div(k, b, a);
    c = exact_div(k, d, a);
    d = sub(k, c, derivative(b));
    ++m;
  }
  return out;
}

}  // namespace patchpencil::exactalg
