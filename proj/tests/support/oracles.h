#pragma once

// Independent reference computations used to check the kernel. Nothing here
// calls the Sturm or subresultant code paths.

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "patchpencil/exactalg/bipoly.h"
#include "patchpencil/exactalg/unipoly.h"

namespace oracle {

using patchpencil::exactalg::BiPoly;
using patchpencil::exactalg::Rat;
using patchpencil::exactalg::UniPoly;

/// Plain coefficient-vector polynomial helpers, deliberately separate from
/// UniPoly's division and gcd.
inline std::vector<Rat> trimmed(std::vector<Rat> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

inline std::vector<Rat> poly_rem(std::vector<Rat> a, const std::vector<Rat>& b) {
  while (a.size() >= b.size() && !a.empty()) {
    const Rat f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
    a = trimmed(a);
  }
  return a;
}

inline std::vector<Rat> poly_quot(std::vector<Rat> a, const std::vector<Rat>& b) {
  if (a.size() < b.size()) return {};
  std::vector<Rat> q(a.size() - b.size() + 1, Rat(0));
  while (a.size() >= b.size() && !a.empty()) {
    const Rat f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
    a.pop_back();
    a = trimmed(a);
  }
  return q;
}

inline std::vector<Rat> squarefree(const std::vector<Rat>& p) {
  std::vector<Rat> d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  d = trimmed(d);
  if (d.empty()) return p;
  std::vector<Rat> a = p, b = d;
  while (!b.empty()) {
    auto r = poly_rem(a, b);
    a = b;
    b = r;
  }
  return poly_quot(p, a);
}

inline Rat horner(const std::vector<Rat>& p, const Rat& x) {
  Rat acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

/// Enclosure of p over [lo, hi] by expanding around the midpoint with the
/// Taylor coefficients bounded termwise.
inline std::pair<Rat, Rat> range(const std::vector<Rat>& p, const Rat& lo, const Rat& hi) {
  const Rat m = (lo + hi) / 2, r = (hi - lo) / 2;
  // Taylor shift p(m + t) = sum c_k t^k.
  std::vector<Rat> c = p;
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = n - 1; j > i; --j) c[j - 1] += m * c[j];
  Rat spread(0), rk(1);
  for (std::size_t k = 1; k < n; ++k) {
    rk *= r;
    spread += abs(c[k]) * rk;
  }
  return {c.empty() ? Rat(0) : c[0] - spread, c.empty() ? Rat(0) : c[0] + spread};
}

/// Counts distinct real roots of p by exhaustive bisection of [-B, B]:
/// subintervals are discarded when p provably has no zero there and are
/// counted (by an endpoint sign change) once p is provably monotone on them.
inline int bisection_root_count(const UniPoly& poly) {
  std::vector<Rat> s = squarefree(trimmed({poly.coeffs().begin(), poly.coeffs().end()}));
  if (s.size() <= 1) return 0;
  Rat bound(0);
  for (std::size_t i = 0; i + 1 < s.size(); ++i) bound = std::max(bound, Rat(abs(s[i] / s.back())));
  bound += 1;
  std::vector<Rat> ds;
  for (std::size_t i = 1; i < s.size(); ++i) ds.push_back(s[i] * static_cast<long>(i));
  int count = 0;
  std::vector<std::pair<Rat, Rat>> stack{{-bound, bound}};
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    const Rat flo = horner(s, lo);
    auto [a, b] = range(s, lo, hi);
    if (a > 0 || b < 0) continue;
    auto [da, db] = range(ds, lo, hi);
    if (da > 0 || db < 0) {
      const Rat fhi = horner(s, hi);
      if (flo != 0 && fhi != 0 && (flo < 0) != (fhi < 0)) ++count;
      continue;
    }
    const Rat mid = (lo + hi) / 2;
    // A root exactly on a split point is counted here, once.
    if (horner(s, mid) == 0) ++count;
    stack.push_back({mid, hi});
    stack.push_back({lo, mid});
  }
  return count;
}

/// Determinant of a square matrix over Q[X] by Laplace expansion along the
/// first row, memoised on the set of remaining columns.
inline UniPoly laplace_det(const std::vector<std::vector<UniPoly>>& m) {
  const std::size_t n = m.size();
  std::map<unsigned, UniPoly> memo;
  auto rec = [&](auto&& self, std::size_t row, unsigned cols) -> UniPoly {
    if (row == n) return UniPoly::constant(Rat(1));
    if (auto it = memo.find(cols); it != memo.end()) return it->second;
    UniPoly acc;
    int position = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(cols & (1U << c))) continue;
      if (!m[row][c].is_zero()) {
        UniPoly term = m[row][c] * self(self, row + 1, cols & ~(1U << c));
        if (position % 2) acc -= term;
        else acc += term;
      }
      ++position;
    }
    memo[cols] = acc;
    return acc;
  };
  return rec(rec, 0, (1U << n) - 1);
}

/// Res_Y(p, q) as the determinant of the Sylvester matrix (rows of p first).
inline UniPoly sylvester_resultant(const BiPoly& p, const BiPoly& q) {
  const auto a = p.y_coeffs(), b = q.y_coeffs();
  const int m = static_cast<int>(a.size()) - 1, n = static_cast<int>(b.size()) - 1;
  const int size = m + n;
  if (size == 0) return UniPoly::constant(Rat(1));
  std::vector<std::vector<UniPoly>> s(static_cast<std::size_t>(size), std::vector<UniPoly>(static_cast<std::size_t>(size)));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] = a[static_cast<std::size_t>(m - k)];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + k)] = b[static_cast<std::size_t>(n - k)];
  return laplace_det(s);
}

/// Elementary symmetric e_2 of a list of values.
inline Rat e2(const std::vector<Rat>& ys) {
  Rat acc(0);
  for (std::size_t i = 0; i < ys.size(); ++i)
    for (std::size_t j = i + 1; j < ys.size(); ++j) acc += ys[i] * ys[j];
  return acc;
}

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(unsigned long seed) : rng(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

  Rat rat(long span = 9, long max_den = 5) {
    Rat r(integer(-span, span), integer(1, max_den));
    r.canonicalize();
    return r;
  }

  Rat nonzero_rat(long span = 9, long max_den = 5) {
    Rat r;
    do r = rat(span, max_den);
    while (r == 0);
    return r;
  }

  UniPoly unipoly(int degree) {
    std::vector<Rat> c;
    for (int i = 0; i < degree; ++i) c.push_back(rat());
    c.push_back(nonzero_rat());
    return UniPoly(c);
  }

  BiPoly bipoly(int max_x, int deg_y, bool force_lead = true) {
    std::map<std::pair<int, int>, Rat> t;
    for (int j = 0; j <= deg_y; ++j)
      for (int i = 0; i <= max_x; ++i)
        if (integer(0, 2) != 0) t[{i, j}] = rat(5, 3);
    if (force_lead) t[{integer(0, max_x), deg_y}] = nonzero_rat(5, 3);
    return BiPoly(t);
  }
};

}  // namespace oracle
