#include "patchpencil/exactalg/rational.h"

#include <cstdio>

#include "patchpencil/error.h"

namespace patchpencil::exactalg {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den))
    fail(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");
  BigInt n(std::string(num), 10);
  BigInt d(std::string(den), 10);
  if (d == 0) fail(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  if (text.front() == '-') n = -n;
  Rat r(n, d);
  r.canonicalize();
  return r;
}

std::string format_rat(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string approx_string(const Rat& r, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, r.get_d());
  return buf;
}

Rat pow(const Rat& r, long e) {
  if (e < 0) {
    if (r == 0) fail(ErrorKind::Precondition, "zero to a negative power");
    return pow(Rat(1) / r, -e);
  }
  Rat result(1), base(r);
  unsigned long k = static_cast<unsigned long>(e);
  while (k) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k) base *= base;
  }
  return result;
}

std::optional<Rat> exact_root(const Rat& r, unsigned long n) {
  if (n == 0 || r <= 0) return std::nullopt;
  BigInt num, den;
  if (!mpz_root(num.get_mpz_t(), r.get_num().get_mpz_t(), n)) return std::nullopt;
  if (!mpz_root(den.get_mpz_t(), r.get_den().get_mpz_t(), n)) return std::nullopt;
  Rat out(num, den);
  out.canonicalize();
  return out;
}

}  // namespace patchpencil::exactalg
