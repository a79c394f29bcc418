#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "patchpencil/construct/curves.h"
#include "patchpencil/construct/nonsingular.h"
#include "patchpencil/error.h"
#include "patchpencil/polygon/polygon.h"

namespace patchpencil::construct {

/// Shape check of the truncation of a curve to one corner edge of its
/// Newton triangle: exactly the two end monomials, with the requested sign
/// relation, and no support beyond the edge.
struct CornerCheck {
  polygon::Edge edge;
  BiPoly truncation;
  bool same_sign = true;  // Y^d + X^m (true) or Y^d - X^m (false)
  bool passed = false;
  std::string reason;
};

struct FiberCheck {
  std::optional<Rat> a;  // first grid entry with d distinct real roots
  std::vector<int> counts;  // real root count per tried grid entry
  bool passed = false;
};

struct Certificates {
  NonsingularVerdict nonsingular;
  bool nonsingular_checked = false;
  CornerCheck corner_origin;
  CornerCheck corner_far;
  FiberCheck fiber;

  bool all_pass() const;
  /// Name of the first failing check, empty when all pass.
  std::string first_failure() const;
};

struct CertifiedCurve {
  int d = 0;
  std::vector<Rat> alphas;
  BiPoly poly;
  Rat epsilon;
  Rat all_real_x;
  Certificates certificates;
};

/// Certification refuted for an explicit epsilon, or exhausted during the
/// search; carries the last certificate record.
class CertificationError : public Error {
 public:
  CertificationError(ErrorKind kind, const std::string& what, Rat epsilon, Certificates cert, bool searched)
      : Error(kind, what), epsilon_(std::move(epsilon)), cert_(std::move(cert)), searched_(searched) {}
  const Rat& epsilon() const { return epsilon_; }
  const Certificates& certificates() const { return cert_; }
  bool searched() const { return searched_; }

 private:
  Rat epsilon_;
  Certificates cert_;
  bool searched_;
};

CornerCheck check_corner(const BiPoly& p, const polygon::Edge& edge, bool same_sign);

FiberCheck check_fiber(const BiPoly& p, int d, const std::vector<Rat>& a_grid);

/// Runs the checks cheapest first, stopping at the first failure.
Certificates certify(const BiPoly& p, int d, const std::vector<Rat>& a_grid, long split_budget = 256);

/// Maximum number of halvings tried by the epsilon search.
inline constexpr int kEpsilonAttempts = 60;

/// Builds C_sing + eps (Y^d + X - X^(d-1)) and certifies it. With an explicit
/// epsilon, a refuted check throws CertificationError (kind Certification,
/// or Inconclusive when smoothness could not be decided). Otherwise eps runs
/// over 1, 1/2, 1/4, ... and the first fully certified value is returned.
CertifiedCurve build_c(const ConstructionParams& params, long split_budget = 256);

nlohmann::json to_json(const Certificates& c);
Certificates certificates_from_json(const nlohmann::json& j);
nlohmann::json to_json(const CertifiedCurve& c);
CertifiedCurve certified_curve_from_json(const nlohmann::json& j);

}  // namespace patchpencil::construct
