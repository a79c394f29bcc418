#include "patchpencil/construct/certify.h"

#include "patchpencil/exactalg/rational.h"
#include "patchpencil/exactalg/sturm.h"

namespace patchpencil::construct {

using exactalg::format_rat;
using exactalg::parse_rat;
using polygon::cross;
using polygon::Edge;
using polygon::LatticePoint;

bool Certificates::all_pass() const { return first_failure().empty(); }

std::string Certificates::first_failure() const {
  if (!corner_origin.passed) return "corner_origin";
  if (!corner_far.passed) return "corner_far";
  if (!fiber.passed) return "fiber";
  if (!nonsingular_checked || nonsingular.outcome != Smoothness::Nonsingular) return "nonsingular";
  return "";
}

CornerCheck check_corner(const BiPoly& p, const Edge& edge, bool same_sign) {
  CornerCheck out{edge, BiPoly(), same_sign, false, ""};
  // The rest of the triangle lies to the left of a -> b; nothing may cross.
  for (const auto& [e, c] : p.terms())
    if (cross(edge.a, edge.b, polygon::to_point(e)) < 0) {
      out.reason = "support beyond the edge";
      return out;
    }
  out.truncation = polygon::edge_truncation(p, edge);
  const auto& t = out.truncation.terms();
  const auto ca = t.find(polygon::to_exponent(edge.a));
  const auto cb = t.find(polygon::to_exponent(edge.b));
  if (t.size() != 2 || ca == t.end() || cb == t.end()) {
    out.reason = "truncation is not the binomial of the edge endpoints";
    return out;
  }
  if ((sgn(ca->second) == sgn(cb->second)) != same_sign) {
    out.reason = "binomial has the wrong sign pattern";
    return out;
  }
  out.passed = true;
  return out;
}

FiberCheck check_fiber(const BiPoly& p, int d, const std::vector<Rat>& a_grid) {
  FiberCheck out;
  for (const auto& a : a_grid) {
    const auto fiber = p.at_x(a);
    const int count = fiber.is_zero() ? -1 : exactalg::real_root_count(fiber);
    out.counts.push_back(count);
    if (count == d) {
      out.a = a;
      out.passed = true;
      return out;
    }
  }
  return out;
}

Certificates certify(const BiPoly& p, int d, const std::vector<Rat>& a_grid, long split_budget) {
  Certificates c;
  const LatticePoint top{0, d};
  // Orientations chosen so the triangle interior lies to the left.
  c.corner_origin = check_corner(p, {top, {1, 0}}, true);
  c.corner_far = check_corner(p, {{d - 1, 0}, top}, false);
  if (!c.corner_origin.passed || !c.corner_far.passed) return c;
  c.fiber = check_fiber(p, d, a_grid);
  if (!c.fiber.passed) return c;
  c.nonsingular = verify_nonsingular(p, p.total_degree(), split_budget);
  c.nonsingular_checked = true;
  return c;
}

CertifiedCurve build_c(const ConstructionParams& params, long split_budget) {
  ConstructionParams p = params;
  validate(p, 3);
  const BiPoly csing = build_csing(p);
  auto attempt = [&](const Rat& eps) {
    const BiPoly poly = perturb(csing, p.d, eps);
    return std::make_pair(poly, certify(poly, p.d, p.a_grid, split_budget));
  };
  auto success = [&](const BiPoly& poly, const Rat& eps, Certificates cert) {
    return CertifiedCurve{p.d, p.alphas, poly, eps, *cert.fiber.a, std::move(cert)};
  };
  if (p.epsilon) {
    auto [poly, cert] = attempt(*p.epsilon);
    if (cert.all_pass()) return success(poly, *p.epsilon, std::move(cert));
    const std::string failed = cert.first_failure();
    const bool undecided = failed == "nonsingular" && cert.nonsingular.outcome == Smoothness::Inconclusive;
    throw CertificationError(undecided ? ErrorKind::Inconclusive : ErrorKind::Certification,
                             "epsilon " + format_rat(*p.epsilon) + " fails the " + failed + " check", *p.epsilon,
                             std::move(cert), false);
  }
  Rat eps = 1;
  Certificates last;
  for (int i = 0; i < kEpsilonAttempts; ++i, eps /= 2) {
    auto [poly, cert] = attempt(eps);
    if (cert.all_pass()) return success(poly, eps, std::move(cert));
    last = std::move(cert);
  }
  throw CertificationError(ErrorKind::Certification,
                           "no epsilon down to " + format_rat(eps * 2) + " passes all checks (last failure: " +
                               last.first_failure() + ")",
                           eps * 2, std::move(last), true);
}

namespace {

nlohmann::json edge_json(const Edge& e) { return {{e.a.i, e.a.j}, {e.b.i, e.b.j}}; }

nlohmann::json corner_json(const CornerCheck& c) {
  nlohmann::json j{{"edge", edge_json(c.edge)},
                   {"truncation", exactalg::to_json(c.truncation)},
                   {"shape", c.same_sign ? "Y^d+X^m" : "Y^d-X^m"},
                   {"passed", c.passed}};
  if (!c.reason.empty()) j["reason"] = c.reason;
  return j;
}

nlohmann::json rats_json(const std::vector<Rat>& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : v) out.push_back(format_rat(r));
  return out;
}

std::vector<Rat> rats_from_json(const nlohmann::json& j) {
  if (!j.is_array()) fail(ErrorKind::Parse, "expected an array of rationals");
  std::vector<Rat> out;
  for (const auto& v : j) {
    if (!v.is_string()) fail(ErrorKind::Parse, "rationals are encoded as strings");
    out.push_back(parse_rat(v.get<std::string>()));
  }
  return out;
}

polygon::LatticePoint point_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2) fail(ErrorKind::Parse, "lattice point must be [i, j]");
  return {j[0].get<long>(), j[1].get<long>()};
}

CornerCheck corner_from_json(const nlohmann::json& j) {
  CornerCheck c;
  const auto& e = j.at("edge");
  if (!e.is_array() || e.size() != 2) fail(ErrorKind::Parse, "edge must be a pair of lattice points");
  c.edge = {point_from_json(e[0]), point_from_json(e[1])};
  c.truncation = exactalg::bipoly_from_json(j.at("truncation"));
  const auto shape = j.at("shape").get<std::string>();
  if (shape != "Y^d+X^m" && shape != "Y^d-X^m") fail(ErrorKind::Parse, "unknown corner shape " + shape);
  c.same_sign = shape == "Y^d+X^m";
  c.passed = j.at("passed").get<bool>();
  c.reason = j.value("reason", "");
  return c;
}

Smoothness smoothness_from_string(const std::string& s) {
  for (auto k : {Smoothness::Nonsingular, Smoothness::Singular, Smoothness::Inconclusive})
    if (to_string(k) == s) return k;
  fail(ErrorKind::Parse, "unknown smoothness verdict " + s);
}

}  // namespace

Certificates certificates_from_json(const nlohmann::json& j) {
  try {
    Certificates c;
    const auto& ns = j.at("nonsingular");
    c.nonsingular_checked = ns.at("checked").get<bool>();
    if (c.nonsingular_checked) {
      c.nonsingular.outcome = smoothness_from_string(ns.at("verdict").get<std::string>());
      c.nonsingular.detail = ns.at("detail").get<std::string>();
      c.nonsingular.chart = ns.value("chart", "");
      if (ns.contains("point")) {
        const auto p = rats_from_json(ns.at("point"));
        if (p.size() != 3) fail(ErrorKind::Parse, "singular point needs three coordinates");
        c.nonsingular.point = std::array<Rat, 3>{p[0], p[1], p[2]};
      }
    }
    c.corner_origin = corner_from_json(j.at("corner_origin"));
    c.corner_far = corner_from_json(j.at("corner_far"));
    const auto& fiber = j.at("fiber");
    c.fiber.counts = fiber.at("counts").get<std::vector<int>>();
    c.fiber.passed = fiber.at("passed").get<bool>();
    if (fiber.contains("a")) c.fiber.a = parse_rat(fiber.at("a").get<std::string>());
    if (j.at("all_pass").get<bool>() != c.all_pass()) fail(ErrorKind::Parse, "all_pass disagrees with the checks");
    return c;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, std::string("malformed certificates: ") + e.what());
  }
}

nlohmann::json to_json(const Certificates& c) {
  nlohmann::json ns{{"checked", c.nonsingular_checked}};
  if (c.nonsingular_checked) {
    ns["verdict"] = to_string(c.nonsingular.outcome);
    ns["detail"] = c.nonsingular.detail;
    if (!c.nonsingular.chart.empty()) ns["chart"] = c.nonsingular.chart;
    if (c.nonsingular.point) ns["point"] = rats_json({c.nonsingular.point->begin(), c.nonsingular.point->end()});
  }
  nlohmann::json fiber{{"counts", c.fiber.counts}, {"passed", c.fiber.passed}};
  if (c.fiber.a) fiber["a"] = format_rat(*c.fiber.a);
  return {{"nonsingular", ns},
          {"corner_origin", corner_json(c.corner_origin)},
          {"corner_far", corner_json(c.corner_far)},
          {"fiber", fiber},
          {"all_pass", c.all_pass()}};
}

nlohmann::json to_json(const CertifiedCurve& c) {
  return {{"d", c.d},
          {"alphas", rats_json(c.alphas)},
          {"epsilon", format_rat(c.epsilon)},
          {"a", format_rat(c.all_real_x)},
          {"poly", exactalg::to_json(c.poly)},
          {"certificates", to_json(c.certificates)}};
}

CertifiedCurve certified_curve_from_json(const nlohmann::json& j) {
  try {
    CertifiedCurve c;
    c.d = j.at("d").get<int>();
    c.alphas = rats_from_json(j.at("alphas"));
    c.epsilon = parse_rat(j.at("epsilon").get<std::string>());
    c.all_real_x = parse_rat(j.at("a").get<std::string>());
    c.poly = exactalg::bipoly_from_json(j.at("poly"));
    c.certificates = certificates_from_json(j.at("certificates"));
    return c;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, std::string("malformed curve document: ") + e.what());
  }
}

}  // namespace patchpencil::construct
