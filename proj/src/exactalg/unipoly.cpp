#include "patchpencil/exactalg/unipoly.h"

#include <sstream>

#include "patchpencil/error.h"

namespace patchpencil::exactalg {

namespace {
const Rat kZero(0);
}

UniPoly::UniPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly UniPoly::constant(const Rat& c) { return UniPoly(std::vector<Rat>{c}); }

UniPoly UniPoly::monomial(const Rat& c, int exponent) {
  std::vector<Rat> v(static_cast<std::size_t>(exponent) + 1, Rat(0));
  v.back() = c;
  return UniPoly(std::move(v));
}

const Rat& UniPoly::lc() const {
  if (coeffs_.empty()) fail(ErrorKind::Precondition, "leading coefficient of the zero polynomial");
  return coeffs_.back();
}

const Rat& UniPoly::operator[](int i) const {
  if (i < 0 || i > degree()) return kZero;
  return coeffs_[static_cast<std::size_t>(i)];
}

Rat UniPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rat> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  UniPoly out(*this);
  const Rat inv = Rat(1) / lc();
  for (auto& c : out.coeffs_) c *= inv;
  return out;
}

UniPoly UniPoly::scale_variable(const Rat& lambda) const {
  UniPoly out(*this);
  Rat power(1);
  for (auto& c : out.coeffs_) {
    c *= power;
    power *= lambda;
  }
  out.trim();
  return out;
}

UniPoly UniPoly::primitive() const {
  if (is_zero()) return {};
  BigInt den_lcm(1), num_gcd(0);
  for (const auto& c : coeffs_) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
  }
  Rat factor(den_lcm, num_gcd);
  factor.canonicalize();
  return *this * factor;
}

UniPoly UniPoly::operator-() const {
  UniPoly out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rat& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(out));
}

std::string UniPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rat& c = (*this)[i];
    if (c == 0) continue;
    Rat mag = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const bool unit = mag == 1;
    if (!unit || i == 0) os << mag.get_str();
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

DivMod divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) fail(ErrorKind::Precondition, "polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly{}, a};
  std::vector<Rat> r(a.coeffs().begin(), a.coeffs().end());
  std::vector<Rat> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rat(0));
  const Rat inv_lc = Rat(1) / b.lc();
  const int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    const Rat& top = r[static_cast<std::size_t>(k)];
    if (top == 0) continue;
    Rat f = top * inv_lc;
    q[static_cast<std::size_t>(k - db)] = f;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= f * b[j];
  }
  r.resize(static_cast<std::size_t>(db));
  return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly rem(const UniPoly& a, const UniPoly& b) { return divmod(a, b).remainder; }

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) fail(ErrorKind::Precondition, "inexact polynomial division");
  return q;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a.monic(), y = b.monic();
  while (!y.is_zero()) {
    UniPoly r = rem(x, y).monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

std::pair<UniPoly, UniPoly> gcd_inverse(const UniPoly& a, const UniPoly& m) {
  // Invariant: r0 = s0 * a (mod m), r1 = s1 * a (mod m).
  UniPoly r0 = m, r1 = rem(a, m);
  UniPoly s0, s1 = UniPoly::constant(Rat(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    UniPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.is_zero()) return {UniPoly{}, UniPoly{}};
  const Rat inv = Rat(1) / r0.lc();
  return {r0 * inv, rem(s0 * inv, m)};
}

UniPoly pow(const UniPoly& p, int e) {
  UniPoly result = UniPoly::constant(Rat(1)), base = p;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.is_zero()) fail(ErrorKind::Precondition, "squarefree part of the zero polynomial");
  return exact_div(p, gcd(p, p.derivative())).monic();
}

std::vector<UniPoly> yun_factors(const UniPoly& p) {
  if (p.is_zero()) fail(ErrorKind::Precondition, "squarefree decomposition of the zero polynomial");
  std::vector<UniPoly> out;
  if (p.degree() == 0) return out;
  const UniPoly dp = p.derivative();
  const UniPoly a0 = gcd(p, dp);
  UniPoly b = exact_div(p, a0);
  UniPoly c = exact_div(dp, a0);
  UniPoly d = c - b.derivative();
  while (b.degree() > 0) {
    UniPoly a = gcd(b, d);
    out.push_back(a.monic());
    b = exact_div(b, a);
    c = exact_div(d, a);
    d = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

}  // namespace patchpencil::exactalg
