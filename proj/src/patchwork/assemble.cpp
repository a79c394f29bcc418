#include "patchpencil/patchwork/assemble.h"

#include "patchpencil/error.h"
#include "patchpencil/exactalg/rational.h"

namespace patchpencil::patchwork {

namespace {

template <typename F>
auto stage(const char* name, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    throw e.with_stage(name);
  }
}

}  // namespace

Assembly assemble_fan(const construct::ConstructionParams& params, long refine_budget, long split_budget) {
  const int d = params.d;
  auto subdivision = stage("subdivision", [&] { return polygon::fan_subdivision(d); });
  auto curve = stage("construct", [&] { return construct::build_c(params, split_budget); });
  const BiPoly tilde = stage("transform", [&] { return construct::tilde_transform(curve.poly, d); });
  const auto standard = stage("pieces", [&] { return construct::standard_pieces(d); });
  std::map<std::string, BiPoly> polys{{"C", curve.poly}, {"Ctilde", tilde}};
  for (const auto& s : standard) polys.emplace(s.label, s.poly);
  std::vector<Piece> pieces;
  for (const auto& cell : subdivision.cells) pieces.push_back({cell.label, polys.at(cell.label), cell.polygon});

  auto scalings = stage("normalize", [&] { return normalize_pieces(pieces, subdivision); });
  auto profiles = stage("profile", [&] { return profile_pieces(normalized(pieces, scalings), refine_budget); });
  auto scheme = stage("glue", [&] { return glue_lscheme(profiles, d); });
  return {std::move(curve), std::move(subdivision), std::move(pieces), std::move(scalings), std::move(profiles),
          std::move(scheme)};
}

nlohmann::json to_json(const Assembly& a) {
  nlohmann::json pieces = nlohmann::json::array();
  for (std::size_t i = 0; i < a.pieces.size(); ++i) {
    const auto& s = a.scalings[i];
    pieces.push_back({{"label", a.pieces[i].label},
                      {"poly", exactalg::to_json(a.pieces[i].poly)},
                      {"scaling",
                       {{"c", exactalg::format_rat(s.c)},
                        {"lambda", exactalg::format_rat(s.lambda)},
                        {"mu", exactalg::format_rat(s.mu)}}}});
  }
  return {{"d", a.curve.d},
          {"curve", construct::to_json(a.curve)},
          {"subdivision", polygon::to_json(a.subdivision)},
          {"pieces", pieces},
          {"scheme", to_json(a.scheme)}};
}

}  // namespace patchpencil::patchwork
