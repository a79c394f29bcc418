#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "patchpencil/exactalg/sturm.h"
#include "patchpencil/exactalg/unipoly.h"

namespace patchpencil::exactalg {

/// A real algebraic number: the unique real root of a squarefree polynomial
/// inside a closed isolating interval [lo, hi]. When lo == hi the number is
/// that rational.
class AlgebraicNumber {
 public:
  /// Validates that `defining` (made squarefree and monic) has exactly one
  /// real root in [lo, hi].
  AlgebraicNumber(const UniPoly& defining, const Rat& lo, const Rat& hi);
  static AlgebraicNumber rational(const Rat& r);

  const UniPoly& defining() const { return defining_; }
  const Rat& lo() const { return lo_; }
  const Rat& hi() const { return hi_; }
  bool is_exact() const { return lo_ == hi_; }
  /// The value when it is rational (exact interval or linear defining poly).
  std::optional<Rat> as_rational() const;

  /// Halves the interval, keeping the half where the Sturm count is 1.
  AlgebraicNumber bisected() const;
  AlgebraicNumber refined_to(const Rat& width) const;

  /// Sign of (this - r): -1, 0 or 1. Exact.
  int compare(const Rat& r) const;
  int sign() const { return compare(Rat(0)); }

  double approx() const;
  std::string to_string() const;

  friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    return a.defining_ == b.defining_ && a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

 private:
  AlgebraicNumber() = default;
  UniPoly defining_;
  Rat lo_, hi_;
};

/// Returns the rational form of a when a is rational with a small enough
/// denominator to be caught within `steps` bisections: once the interval is
/// narrower than 1/q^2 the root p/q is the simplest rational inside it.
AlgebraicNumber recognize_rational(const AlgebraicNumber& a, int steps = 64);

/// Simplest rational (least denominator, then least absolute value) in the
/// closed interval [lo, hi].
Rat simplest_in(const Rat& lo, const Rat& hi);

/// Exact total order of two real algebraic numbers.
int compare(const AlgebraicNumber& a, const AlgebraicNumber& b);

/// One AlgebraicNumber per distinct real root, sorted, intervals pairwise
/// disjoint; the defining polynomial is the squarefree part of p.
std::vector<AlgebraicNumber> isolate_real_roots(const UniPoly& p);

/// Rational interval enclosing {p(x) : lo <= x <= hi}.
std::pair<Rat, Rat> eval_range(const UniPoly& p, const Rat& lo, const Rat& hi);

/// A rational root as "num/den"; otherwise {"root_of": [...], "lo", "hi"}.
nlohmann::json to_json(const AlgebraicNumber& a);
AlgebraicNumber algebraic_from_json(const nlohmann::json& j);

}  // namespace patchpencil::exactalg
