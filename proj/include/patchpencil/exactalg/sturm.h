#pragma once

#include <vector>

#include "patchpencil/exactalg/unipoly.h"

namespace patchpencil::exactalg {

/// A point of the extended rational line.
class Bound {
 public:
  enum class Kind { NegInf, Finite, PosInf };

  Bound(const Rat& v) : kind_(Kind::Finite), value_(v) {}  // NOLINT(implicit)
  Bound(long v) : kind_(Kind::Finite), value_(v) {}        // NOLINT(implicit)
  static Bound neg_inf() { return Bound(Kind::NegInf); }
  static Bound pos_inf() { return Bound(Kind::PosInf); }

  Kind kind() const { return kind_; }
  bool finite() const { return kind_ == Kind::Finite; }
  const Rat& value() const { return value_; }

  friend bool operator<(const Bound& a, const Bound& b);

 private:
  explicit Bound(Kind k) : kind_(k) {}
  Kind kind_;
  Rat value_;
};

/// Sign of p at an extended point (the sign at infinity is the limit sign).
int sign_at(const UniPoly& p, const Bound& x);

/// Sturm chain p, p', -rem(...), ... each rescaled by a positive constant.
std::vector<UniPoly> sturm_chain(const UniPoly& p);

/// Sign variations of a chain at x, zeros skipped.
int sign_variations(const std::vector<UniPoly>& chain, const Bound& x);

/// Number of distinct real roots of p in (lo, hi]. Throws
/// "indeterminate root count" for the zero polynomial.
int sturm_count(const UniPoly& p, const Bound& lo, const Bound& hi);

/// Distinct real roots over the whole line.
inline int real_root_count(const UniPoly& p) {
  return sturm_count(p, Bound::neg_inf(), Bound::pos_inf());
}

/// Cauchy bound 1 + max |c_i / c_D|: every root lies strictly inside
/// (-bound, bound).
Rat cauchy_bound(const UniPoly& p);

struct MultiplicityClass {
  int multiplicity = 0;
  int degree = 0;      // degree of the squarefree factor s_m
  int real_roots = 0;  // distinct real roots of s_m
};

/// p = lc * prod s_m^m with squarefree, pairwise coprime s_m; one entry per
/// m with deg s_m > 0, ascending in m.
std::vector<MultiplicityClass> squarefree_mult_structure(const UniPoly& p);

}  // namespace patchpencil::exactalg
