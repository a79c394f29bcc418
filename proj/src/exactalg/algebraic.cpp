#include "patchpencil/exactalg/algebraic.h"

#include <algorithm>

#include "patchpencil/error.h"

namespace patchpencil::exactalg {

namespace {

/// Roots of a squarefree s in the closed interval [lo, hi].
int closed_count(const UniPoly& s, const Rat& lo, const Rat& hi) {
  if (lo == hi) return s.sign_at(lo) == 0 ? 1 : 0;
  return sturm_count(s, lo, hi) + (s.sign_at(lo) == 0 ? 1 : 0);
}

}  // namespace

AlgebraicNumber::AlgebraicNumber(const UniPoly& defining, const Rat& lo, const Rat& hi)
    : defining_(squarefree_part(defining)), lo_(lo), hi_(hi) {
  if (hi_ < lo_) fail(ErrorKind::Precondition, "isolating interval with lo > hi");
  if (defining_.degree() < 1 || closed_count(defining_, lo_, hi_) != 1)
    fail(ErrorKind::Precondition, "interval does not isolate exactly one root");
  if (lo_ != hi_ && defining_.sign_at(lo_) == 0) hi_ = lo_;
  else if (lo_ != hi_ && defining_.sign_at(hi_) == 0) lo_ = hi_;
}

AlgebraicNumber AlgebraicNumber::rational(const Rat& r) {
  AlgebraicNumber a;
  a.defining_ = UniPoly{-r, Rat(1)};
  a.lo_ = r;
  a.hi_ = r;
  return a;
}

std::optional<Rat> AlgebraicNumber::as_rational() const {
  if (is_exact()) return lo_;
  if (defining_.degree() == 1) return -defining_[0] / defining_[1];
  return std::nullopt;
}

AlgebraicNumber AlgebraicNumber::bisected() const {
  if (is_exact()) return *this;
  AlgebraicNumber out(*this);
  const Rat mid = (lo_ + hi_) / 2;
  if (defining_.sign_at(mid) == 0) {
    out.lo_ = out.hi_ = mid;
  } else if (sturm_count(defining_, lo_, mid) == 1) {
    out.hi_ = mid;
  } else {
    out.lo_ = mid;
  }
  return out;
}

AlgebraicNumber AlgebraicNumber::refined_to(const Rat& width) const {
  if (width <= 0) fail(ErrorKind::Precondition, "refinement width must be positive");
  AlgebraicNumber out(*this);
  while (out.hi_ - out.lo_ > width) out = out.bisected();
  return out;
}

int AlgebraicNumber::compare(const Rat& r) const {
  if (r < lo_) return 1;
  if (r > hi_) return -1;
  if (is_exact()) return 0;  // r == lo == hi
  if (defining_.sign_at(r) == 0) return 0;
  if (r == lo_) return 1;
  if (r == hi_) return -1;
  return sturm_count(defining_, lo_, r) == 1 ? -1 : 1;
}

double AlgebraicNumber::approx() const {
  return refined_to(Rat(1, 1u << 30)).lo_.get_d();
}

std::string AlgebraicNumber::to_string() const {
  if (auto r = as_rational()) return format_rat(*r);
  return "root of " + defining_.to_string() + " in [" + format_rat(lo_) + ", " + format_rat(hi_) + "]";
}

int compare(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (auto r = b.as_rational()) return a.compare(*r);
  if (auto r = a.as_rational()) return -b.compare(*r);
  // Equal numbers are a common root of g = gcd(fa, fb).
  const UniPoly g = gcd(a.defining(), b.defining());
  const bool both_on_g = g.degree() >= 1 && closed_count(g, a.lo(), a.hi()) == 1 &&
                         closed_count(g, b.lo(), b.hi()) == 1;
  AlgebraicNumber x = a, y = b;
  while (true) {
    if (x.hi() < y.lo()) return -1;
    if (y.hi() < x.lo()) return 1;
    if (both_on_g && closed_count(g, std::min(x.lo(), y.lo()), std::max(x.hi(), y.hi())) == 1) return 0;
    x = x.bisected();
    y = y.bisected();
  }
}

std::pair<Rat, Rat> eval_range(const UniPoly& p, const Rat& lo, const Rat& hi) {
  // Interval Horner scheme.
  Rat a(0), b(0);
  for (int i = p.degree(); i >= 0; --i) {
    const Rat c1 = a * lo, c2 = a * hi, c3 = b * lo, c4 = b * hi;
    a = std::min({c1, c2, c3, c4}) + p[i];
    b = std::max({c1, c2, c3, c4}) + p[i];
  }
  return {a, b};
}

std::vector<AlgebraicNumber> isolate_real_roots(const UniPoly& p) {
  if (p.is_zero()) fail(ErrorKind::Precondition, "root isolation of the zero polynomial");
  const UniPoly s = squarefree_part(p);
  std::vector<AlgebraicNumber> out;
  if (s.degree() < 1) return out;
  const auto chain = sturm_chain(s);
  auto count = [&](const Rat& lo, const Rat& hi) {
    return sign_variations(chain, lo) - sign_variations(chain, hi);
  };
  // Invariant: s(lo) != 0, s(hi) != 0, n = roots in (lo, hi).
  auto rec = [&](auto&& self, const Rat& lo, const Rat& hi, int n) -> void {
    if (n == 0) return;
    if (n == 1) {
      out.emplace_back(s, lo, hi);
      return;
    }
    const Rat mid = (lo + hi) / 2;
    if (s.sign_at(mid) != 0) {
      const int left = count(lo, mid);
      self(self, lo, mid, left);
      self(self, mid, hi, n - left);
      return;
    }
    Rat delta = (hi - lo) / 4;
    while (s.sign_at(mid - delta) == 0 || s.sign_at(mid + delta) == 0 || count(mid - delta, mid + delta) != 1)
      delta /= 2;
    self(self, lo, mid - delta, count(lo, mid - delta));
    out.push_back(AlgebraicNumber::rational(mid));
    self(self, mid + delta, hi, count(mid + delta, hi));
  };
  const Rat bound = cauchy_bound(s);
  rec(rec, -bound, bound, count(-bound, bound));
  // Neighbours may share a (non-root) endpoint; shrink until strictly apart.
  for (std::size_t k = 0; k + 1 < out.size(); ++k)
    while (!(out[k].hi() < out[k + 1].lo())) {
      if (!out[k].is_exact())
        out[k] = out[k].bisected();
      else
        out[k + 1] = out[k + 1].bisected();
    }
  return out;
}

namespace {

Rat floor_of(const Rat& r) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return Rat(q);
}

// Simplest rational in [lo, hi] with 0 <= lo <= hi, by continued fractions.
Rat simplest_nonneg(const Rat& lo, const Rat& hi) {
  const Rat fl = floor_of(lo);
  if (fl == lo) return fl;
  if (fl + 1 <= hi) return fl + 1;
  return fl + 1 / simplest_nonneg(1 / (hi - fl), 1 / (lo - fl));
}

}  // namespace

Rat simplest_in(const Rat& lo, const Rat& hi) {
  if (lo > hi) fail(ErrorKind::Precondition, "empty interval");
  if (lo <= 0 && hi >= 0) return 0;
  if (hi < 0) return -simplest_nonneg(-hi, -lo);
  return simplest_nonneg(lo, hi);
}

AlgebraicNumber recognize_rational(const AlgebraicNumber& a, int steps) {
  if (a.as_rational()) return a;
  AlgebraicNumber cur = a;
  for (int k = 0; k <= steps; ++k) {
    const Rat guess = simplest_in(cur.lo(), cur.hi());
    if (cur.defining().sign_at(guess) == 0) return AlgebraicNumber::rational(guess);
    cur = cur.bisected();
    if (cur.is_exact()) return cur;
  }
  return a;
}

nlohmann::json to_json(const AlgebraicNumber& a) {
  if (auto r = a.as_rational()) return format_rat(*r);
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : a.defining().coeffs()) coeffs.push_back(format_rat(c));
  return {{"root_of", coeffs}, {"lo", format_rat(a.lo())}, {"hi", format_rat(a.hi())}};
}

AlgebraicNumber algebraic_from_json(const nlohmann::json& j) {
  if (j.is_string()) return AlgebraicNumber::rational(parse_rat(j.get<std::string>()));
  if (!j.is_object() || !j.contains("root_of") || !j.contains("lo") || !j.contains("hi"))
    fail(ErrorKind::Parse, "algebraic number must be a fraction string or {root_of, lo, hi}");
  std::vector<Rat> coeffs;
  for (const auto& c : j.at("root_of")) coeffs.push_back(parse_rat(c.get<std::string>()));
  return AlgebraicNumber(UniPoly(coeffs), parse_rat(j.at("lo").get<std::string>()),
                         parse_rat(j.at("hi").get<std::string>()));
}

}  // namespace patchpencil::exactalg
