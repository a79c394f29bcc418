#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "patchpencil/exactalg/rational.h"
#include "patchpencil/exactalg/unipoly.h"

namespace patchpencil::exactalg {

/// Exponent pair (i, j) of the monomial X^i Y^j.
using Exponent = std::pair<int, int>;

/// Sparse bivariate polynomial in X, Y over Q. No zero coefficient is ever
/// stored, so the key set is exactly the support.
class BiPoly {
 public:
  BiPoly() = default;
  /// Zero coefficients are dropped; negative exponents are rejected.
  explicit BiPoly(const std::map<Exponent, Rat>& terms);

  static BiPoly monomial(const Rat& c, int i, int j);
  /// sum_j coeffs[j](X) * Y^j
  static BiPoly from_y_coeffs(const std::vector<UniPoly>& coeffs);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponent, Rat>& terms() const { return terms_; }
  std::vector<Exponent> support() const;
  Rat coeff(int i, int j) const;

  /// -1 for the zero polynomial.
  int degree_x() const;
  int degree_y() const;
  int total_degree() const;

  BiPoly diff_x() const;
  BiPoly diff_y() const;

  /// P(x, Y) as a polynomial in Y.
  UniPoly at_x(const Rat& x) const;
  /// Coefficients of P as a polynomial in Y: result[j] is the coefficient of Y^j.
  std::vector<UniPoly> y_coeffs() const;
  /// Coefficient of the highest power of Y, as a polynomial in X.
  UniPoly lc_y() const;

  /// c * P(lambda X, mu Y).
  BiPoly scaled(const Rat& c, const Rat& lambda, const Rat& mu) const;
  /// Applies an exponent map to every monomial; the map must be injective on
  /// the support and produce nonnegative exponents.
  BiPoly map_exponents(const std::function<Exponent(Exponent)>& f) const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const Rat& c, const BiPoly& a);
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  void add_term(const Exponent& e, const Rat& c);
  std::map<Exponent, Rat> terms_;
};

BiPoly pow(const BiPoly& p, int e);

/// Interchange format: [[i, j, "num/den"], ...], order irrelevant, duplicate
/// exponent pairs rejected.
nlohmann::json to_json(const BiPoly& p);
BiPoly bipoly_from_json(const nlohmann::json& j);

}  // namespace patchpencil::exactalg
