#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace patchpencil::exactalg {

/// Exact rational number. mpq_class keeps every value in lowest terms with a
/// positive denominator once canonicalized; all constructors below do so.
using Rat = mpq_class;
using BigInt = mpz_class;

/// Parses "num/den" or "num" (optional leading '-'); no decimals, no spaces.
Rat parse_rat(std::string_view text);

/// Always emits "num/den", even for integers.
std::string format_rat(const Rat& r);

/// Short human-readable decimal, for annotations only.
std::string approx_string(const Rat& r, int digits = 6);

inline int sign(const Rat& r) { return sgn(r); }

/// r^e for any integer e (r must be nonzero when e < 0).
Rat pow(const Rat& r, long e);

/// Exact positive n-th root of r when r is the n-th power of a rational.
std::optional<Rat> exact_root(const Rat& r, unsigned long n);

}  // namespace patchpencil::exactalg
