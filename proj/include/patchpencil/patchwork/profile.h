#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "patchpencil/exactalg/algebraic.h"
#include "patchpencil/exactalg/bipoly.h"

namespace patchpencil::patchwork {

using exactalg::AlgebraicNumber;

enum class Half { Negative, Positive };

enum class EventKind {
  MaxTangency,   // one real root of multiplicity d, nothing else
  AllReal,       // d distinct real roots (reported at a sample point of the plateau)
  Tangency,      // some real root of multiplicity order >= 2
  GenericCount,  // critical fiber without a multiple real root
};

std::string to_string(Half h);
std::string to_string(EventKind k);
Half half_from_string(const std::string& s);
EventKind event_kind_from_string(const std::string& s);

struct FiberEvent {
  AlgebraicNumber position;
  EventKind kind;
  /// d for MaxTangency and AllReal, the multiplicity for Tangency, the number
  /// of distinct real roots for GenericCount.
  int order = 0;
  /// AllReal only: ends of the plateau; nullopt stands for 0 or infinity.
  std::optional<AlgebraicNumber> plateau_lo, plateau_hi;
};

struct FiberProfile {
  Half half = Half::Positive;
  /// Sorted by position.
  std::vector<FiberEvent> events;
  /// Distinct real roots of the generic fiber before, between and after events.
  std::vector<int> generic_counts;
};

/// Simplest rational (smallest denominator, then smallest absolute value)
/// in the open interval (lo, hi); an absent bound is infinite.
exactalg::Rat simplest_between(const std::optional<exactalg::Rat>& lo, const std::optional<exactalg::Rat>& hi);

/// Real fiber events of p over the open half-line x > 0 or x < 0.
/// Critical fibers are the real roots of Res_Y(p, p_Y) * lc_Y(p); each is
/// classified exactly (at algebraic positions through arithmetic in Q(x)).
/// Throws Inconclusive ("refine") when the refinement budget runs out.
FiberProfile fiber_profile(const exactalg::BiPoly& p, Half half, long refine_budget = 4096);

nlohmann::json to_json(const FiberEvent& e);
nlohmann::json to_json(const FiberProfile& p);
FiberProfile fiber_profile_from_json(const nlohmann::json& j);

}  // namespace patchpencil::patchwork
