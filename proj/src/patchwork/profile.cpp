#include "patchpencil/patchwork/profile.h"

#include "patchpencil/error.h"
#include "patchpencil/exactalg/algebraic_field.h"
#include "patchpencil/exactalg/rational.h"
#include "patchpencil/exactalg/resultant.h"
#include "patchpencil/exactalg/sturm.h"

namespace patchpencil::patchwork {

using exactalg::BiPoly;
using exactalg::BigInt;
using exactalg::MultiplicityClass;
using exactalg::Rat;
using exactalg::UniPoly;

std::string to_string(Half h) { return h == Half::Negative ? "neg" : "pos"; }

std::string to_string(EventKind k) {
  switch (k) {
    case EventKind::MaxTangency: return "MaxTangency";
    case EventKind::AllReal: return "AllReal";
    case EventKind::Tangency: return "Tangency";
    case EventKind::GenericCount: return "GenericCount";
  }
  return "GenericCount";
}

Half half_from_string(const std::string& s) {
  if (s == "neg") return Half::Negative;
  if (s == "pos") return Half::Positive;
  fail(ErrorKind::Parse, "half must be neg or pos, got " + s);
}

EventKind event_kind_from_string(const std::string& s) {
  for (auto k : {EventKind::MaxTangency, EventKind::AllReal, EventKind::Tangency, EventKind::GenericCount})
    if (to_string(k) == s) return k;
  fail(ErrorKind::Parse, "unknown event kind " + s);
}

namespace {

Rat floor_rat(const Rat& r) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return Rat(q);
}

// Simplest rational in (lo, hi) for 0 <= lo < hi, hi possibly infinite.
Rat simplest_nonneg(const Rat& lo, const std::optional<Rat>& hi) {
  const Rat fl = floor_rat(lo);
  if (!hi || fl + 1 < *hi) return fl + 1;
  // (lo, hi) lies in [fl, fl + 1]: write x = fl + 1/y with y in (1/(hi - fl), 1/(lo - fl)).
  const Rat y_lo = 1 / (*hi - fl);
  const std::optional<Rat> y_hi = lo == fl ? std::nullopt : std::optional<Rat>(1 / (lo - fl));
  return fl + 1 / simplest_nonneg(y_lo, y_hi);
}

int real_roots(const std::vector<MultiplicityClass>& classes) {
  int r = 0;
  for (const auto& c : classes) r += c.real_roots;
  return r;
}

FiberEvent classify(const BiPoly& p, const AlgebraicNumber& x, long budget) {
  const int d = p.degree_y();
  const auto exact = x.as_rational();
  const auto classes =
      exact ? exactalg::squarefree_mult_structure(p.at_x(*exact)) : exactalg::fiber_mult_structure(p, x, budget);
  int total_degree = 0, max_real_mult = 0;
  for (const auto& c : classes) {
    total_degree += c.multiplicity * c.degree;
    if (c.real_roots > 0) max_real_mult = std::max(max_real_mult, c.multiplicity);
  }
  if (total_degree == d && classes.size() == 1 && classes[0].degree == 1 && classes[0].real_roots == 1)
    return {x, EventKind::MaxTangency, d, {}, {}};
  if (max_real_mult >= 2) return {x, EventKind::Tangency, max_real_mult, {}, {}};
  return {x, EventKind::GenericCount, real_roots(classes), {}, {}};
}

// Refines a root of the chosen half until its interval stays off zero.
AlgebraicNumber off_zero(AlgebraicNumber a) {
  while (!a.is_exact() && a.lo() <= 0 && a.hi() >= 0) a = a.bisected();
  return a;
}

}  // namespace

Rat simplest_between(const std::optional<Rat>& lo, const std::optional<Rat>& hi) {
  if (lo && hi && *lo >= *hi) fail(ErrorKind::Precondition, "empty interval");
  if ((!lo || *lo < 0) && (!hi || *hi > 0)) return 0;
  if (hi && *hi <= 0) {
    // Mirror into the nonnegative axis.
    const std::optional<Rat> mirrored_hi = lo ? std::optional<Rat>(-*lo) : std::nullopt;
    return -simplest_nonneg(-*hi, mirrored_hi);
  }
  return simplest_nonneg(*lo, hi);
}

FiberProfile fiber_profile(const BiPoly& p, Half half, long refine_budget) {
  if (p.is_zero() || p.degree_y() < 1) fail(ErrorKind::Precondition, "fiber profile needs positive Y-degree");
  const int d = p.degree_y();
  const UniPoly res = exactalg::resultant_y(p, p.diff_y());
  if (res.is_zero()) fail(ErrorKind::Precondition, "fiber profile of a curve with a repeated component");
  const UniPoly critical = exactalg::squarefree_part(res * p.lc_y());

  std::vector<AlgebraicNumber> positions;
  for (const auto& r : exactalg::isolate_real_roots(critical)) {
    const int s = r.sign();
    if ((half == Half::Positive && s > 0) || (half == Half::Negative && s < 0)) positions.push_back(off_zero(exactalg::recognize_rational(r)));
  }

  // Open intervals between consecutive critical positions, bounded by 0 on one end.
  std::vector<std::optional<Rat>> bounds_lo, bounds_hi;
  const std::optional<Rat> zero = Rat(0);
  const std::size_t m = positions.size();
  for (std::size_t k = 0; k <= m; ++k) {
    std::optional<Rat> lo = k == 0 ? (half == Half::Positive ? zero : std::nullopt) : std::optional(positions[k - 1].hi());
    std::optional<Rat> hi = k == m ? (half == Half::Positive ? std::nullopt : zero) : std::optional(positions[k].lo());
    bounds_lo.push_back(lo);
    bounds_hi.push_back(hi);
  }

  FiberProfile out;
  out.half = half;
  for (std::size_t k = 0; k <= m; ++k) {
    const Rat sample = simplest_between(bounds_lo[k], bounds_hi[k]);
    const int count = exactalg::real_root_count(p.at_x(sample));
    if (count == d) {
      // The plateau contributes an event with the same count on both sides.
      FiberEvent e{AlgebraicNumber::rational(sample), EventKind::AllReal, d, {}, {}};
      if (k > 0) e.plateau_lo = positions[k - 1];
      if (k < m) e.plateau_hi = positions[k];
      out.events.push_back(std::move(e));
      out.generic_counts.push_back(d);
    }
    out.generic_counts.push_back(count);
    if (k < m) out.events.push_back(classify(p, positions[k], refine_budget));
  }
  return out;
}

nlohmann::json to_json(const FiberEvent& e) {
  nlohmann::json j{{"kind", to_string(e.kind)}, {"order", e.order}, {"position", exactalg::to_json(e.position)}};
  if (e.kind == EventKind::AllReal)
    j["plateau"] = {e.plateau_lo ? exactalg::to_json(*e.plateau_lo) : nlohmann::json(nullptr),
                    e.plateau_hi ? exactalg::to_json(*e.plateau_hi) : nlohmann::json(nullptr)};
  return j;
}

nlohmann::json to_json(const FiberProfile& p) {
  nlohmann::json events = nlohmann::json::array();
  for (const auto& e : p.events) events.push_back(to_json(e));
  return {{"half", to_string(p.half)}, {"events", events}, {"generic_counts", p.generic_counts}};
}

FiberProfile fiber_profile_from_json(const nlohmann::json& j) {
  try {
    FiberProfile p{half_from_string(j.at("half").get<std::string>()), {}, {}};
    for (const auto& e : j.at("events")) {
      FiberEvent ev{exactalg::algebraic_from_json(e.at("position")), event_kind_from_string(e.at("kind").get<std::string>()),
                    e.at("order").get<int>(), std::nullopt, std::nullopt};
      if (ev.kind == EventKind::AllReal) {
        const auto& pl = e.at("plateau");
        if (!pl.is_array() || pl.size() != 2) fail(ErrorKind::Parse, "plateau must be a pair");
        if (!pl[0].is_null()) ev.plateau_lo = exactalg::algebraic_from_json(pl[0]);
        if (!pl[1].is_null()) ev.plateau_hi = exactalg::algebraic_from_json(pl[1]);
      }
      p.events.push_back(std::move(ev));
    }
    p.generic_counts = j.at("generic_counts").get<std::vector<int>>();
    if (p.generic_counts.size() != p.events.size() + 1)
      fail(ErrorKind::Parse, "profile counts do not match its events");
    return p;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, std::string("malformed profile document: ") + e.what());
  }
}

}  // namespace patchpencil::patchwork
