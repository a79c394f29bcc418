#include "patchpencil/exactalg/resultant.h"

#include <utility>

#include "patchpencil/error.h"

namespace patchpencil::exactalg {

namespace {

void trim(YPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int deg(const YPoly& p) { return static_cast<int>(p.size()) - 1; }

YPoly scale(const YPoly& p, const UniPoly& c) {
  YPoly out;
  out.reserve(p.size());
  for (const auto& x : p) out.push_back(x * c);
  trim(out);
  return out;
}

YPoly divide_exact(const YPoly& p, const UniPoly& c) {
  YPoly out;
  out.reserve(p.size());
  for (const auto& x : p) out.push_back(exact_div(x, c));
  trim(out);
  return out;
}

}  // namespace

YPoly pseudo_remainder(const YPoly& a, const YPoly& b) {
  if (b.empty()) fail(ErrorKind::Precondition, "pseudo-remainder by zero");
  YPoly r = a;
  trim(r);
  const int db = deg(b);
  int e = deg(r) - db + 1;
  if (e <= 0) return r;
  const UniPoly& lcb = b.back();
  while (!r.empty() && deg(r) >= db) {
    const UniPoly t = r.back();
    const int shift = deg(r) - db;
    for (auto& c : r) c = c * lcb;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(shift + j)] -= t * b[static_cast<std::size_t>(j)];
    trim(r);
    --e;
  }
  return e > 0 ? scale(r, pow(lcb, e)) : r;
}

UniPoly resultant_y(const YPoly& p, const YPoly& q) {
  YPoly a = p, b = q;
  trim(a);
  trim(b);
  if (a.empty() || b.empty()) fail(ErrorKind::Precondition, "resultant of the zero polynomial");
  if (deg(a) == 0 && deg(b) == 0) fail(ErrorKind::Precondition, "resultant undefined in Y");
  if (deg(b) == 0) return pow(b[0], deg(a));
  if (deg(a) == 0) return pow(a[0], deg(b));

  int s = 1;
  if (deg(a) < deg(b)) {
    std::swap(a, b);
    if (deg(a) % 2 == 1 && deg(b) % 2 == 1) s = -1;
  }
  UniPoly g = UniPoly::constant(Rat(1));
  UniPoly h = UniPoly::constant(Rat(1));
  while (true) {
    const int delta = deg(a) - deg(b);
    if (deg(a) % 2 == 1 && deg(b) % 2 == 1) s = -s;
    YPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = divide_exact(r, g * pow(h, delta));
    g = a.back();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = exact_div(pow(g, delta), pow(h, delta - 1));
    }
    if (b.empty()) return {};
    if (deg(b) == 0) {
      const int da = deg(a);
      UniPoly res = exact_div(pow(b.back(), da), pow(h, da - 1));
      return s < 0 ? -res : res;
    }
  }
}

UniPoly resultant_y(const BiPoly& p, const BiPoly& q) {
  if (p.is_zero() || q.is_zero()) fail(ErrorKind::Precondition, "resultant of the zero polynomial");
  return resultant_y(p.y_coeffs(), q.y_coeffs());
}

UniPoly discriminant_y(const BiPoly& p) {
  const int d = p.degree_y();
  if (d < 1) fail(ErrorKind::Precondition, "discriminant needs positive Y-degree");
  UniPoly r = resultant_y(p, p.diff_y());
  if ((d * (d - 1) / 2) % 2 == 1) r = -r;
  return exact_div(r, p.lc_y());
}

}  // namespace patchpencil::exactalg
