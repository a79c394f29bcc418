#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "patchpencil/exactalg/rational.h"

namespace patchpencil::exactalg {

/// Dense univariate polynomial over Q. Coefficients are indexed by exponent
/// and the leading coefficient is nonzero unless the polynomial is zero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs);
  UniPoly(std::initializer_list<Rat> coeffs) : UniPoly(std::vector<Rat>(coeffs)) {}

  static UniPoly constant(const Rat& c);
  static UniPoly monomial(const Rat& c, int exponent);
  static UniPoly x() { return monomial(Rat(1), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rat& lc() const;
  /// Coefficient of x^i (zero beyond the degree).
  const Rat& operator[](int i) const;
  std::span<const Rat> coeffs() const { return coeffs_; }

  Rat eval(const Rat& x) const;
  int sign_at(const Rat& x) const { return sign(eval(x)); }
  UniPoly derivative() const;
  UniPoly monic() const;
  /// p(lambda * x).
  UniPoly scale_variable(const Rat& lambda) const;
  /// Multiplies by a positive constant so that the content is 1 and all
  /// coefficients are integers; signs are preserved.
  UniPoly primitive() const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const Rat& c);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rat& c) { return a *= c; }
  friend UniPoly operator*(const Rat& c, UniPoly a) { return a *= c; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(char var = 'X') const;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

struct DivMod {
  UniPoly quotient;
  UniPoly remainder;
};

DivMod divmod(const UniPoly& a, const UniPoly& b);
UniPoly rem(const UniPoly& a, const UniPoly& b);
/// Quotient of an exact division; throws when the remainder is nonzero.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
/// Returns (g, u) with g = gcd(a, m) monic and u*a = g (mod m).
std::pair<UniPoly, UniPoly> gcd_inverse(const UniPoly& a, const UniPoly& m);
UniPoly pow(const UniPoly& p, int e);
/// Monic squarefree part p / gcd(p, p').
UniPoly squarefree_part(const UniPoly& p);
/// Yun decomposition: factors[m-1] is the (monic) product of the
/// irreducible factors of multiplicity exactly m; p = lc * prod factors[m-1]^m.
std::vector<UniPoly> yun_factors(const UniPoly& p);

}  // namespace patchpencil::exactalg
