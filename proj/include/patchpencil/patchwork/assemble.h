#pragma once

#include <vector>

#include "patchpencil/construct/certify.h"
#include "patchpencil/patchwork/glue.h"
#include "patchpencil/polygon/subdivision.h"

namespace patchpencil::patchwork {

struct Assembly {
  construct::CertifiedCurve curve;
  polygon::Subdivision subdivision;
  std::vector<Piece> pieces;  // as built, in cell order
  std::vector<Scaling> scalings;
  std::vector<ProfiledPiece> profiles;  // of the normalized pieces
  LScheme scheme;
};

/// The six-piece fan patchwork: certified C, its tilde transform and the
/// four standard pieces on the fan subdivision, normalized, profiled and
/// glued. Errors are tagged with the failing stage.
Assembly assemble_fan(const construct::ConstructionParams& params, long refine_budget = 4096,
                          long split_budget = 256);

nlohmann::json to_json(const Assembly& a);

}  // namespace patchpencil::patchwork
