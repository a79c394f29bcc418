#include <doctest.h>

#include <algorithm>

#include "oracles.h"
#include "patchpencil/construct/certify.h"
#include "patchpencil/construct/curves.h"
#include "patchpencil/exactalg/resultant.h"
#include "patchpencil/exactalg/sturm.h"
#include "patchpencil/patchwork/assemble.h"
#include "patchpencil/patchwork/glue.h"
#include "patchpencil/patchwork/normalize.h"
#include "patchpencil/patchwork/profile.h"

using namespace patchpencil::patchwork;
using patchpencil::Error;
using patchpencil::ErrorKind;
using patchpencil::exactalg::compare;
using patchpencil::exactalg::UniPoly;
using patchpencil::polygon::Polygon;
using patchpencil::polygon::Subdivision;
namespace construct = patchpencil::construct;
namespace polygon = patchpencil::polygon;

namespace {

BiPoly mono(const Rat& c, int i, int j) { return BiPoly::monomial(c, i, j); }

Polygon tri(polygon::LatticePoint a, polygon::LatticePoint b, polygon::LatticePoint c) { return Polygon::hull({a, b, c}); }

// Every shared edge carries identical truncations after scaling.
void check_edges_match(const std::vector<Piece>& pieces, const std::vector<Scaling>& sc) {
  for (std::size_t a = 0; a < pieces.size(); ++a)
    for (std::size_t b = a + 1; b < pieces.size(); ++b)
      if (auto e = polygon::shared_edge(pieces[a].cell, pieces[b].cell))
        CHECK(polygon::edge_truncation(apply(sc[a], pieces[a].poly), *e) ==
              polygon::edge_truncation(apply(sc[b], pieces[b].poly), *e));
}

Subdivision subdivision_of(const std::vector<Piece>& pieces) {
  std::vector<polygon::LatticePoint> all;
  Subdivision s{Polygon::hull({{0, 0}}), {}};
  for (const auto& p : pieces) {
    all.insert(all.end(), p.cell.vertices().begin(), p.cell.vertices().end());
    s.cells.push_back({p.label, p.cell});
  }
  s.target = Polygon::hull(all);
  return s;
}

std::vector<Piece> fan_pieces(int d, const BiPoly& c) {
  const auto s = polygon::fan_subdivision(d);
  std::map<std::string, BiPoly> polys{{"C", c}, {"Ctilde", construct::tilde_transform(c, d)}};
  for (const auto& p : construct::standard_pieces(d)) polys.emplace(p.label, p.poly);
  std::vector<Piece> out;
  for (const auto& cell : s.cells) out.push_back({cell.label, polys.at(cell.label), cell.polygon});
  return out;
}

}  // namespace

TEST_CASE("simplest rational in an open interval") {
  CHECK(simplest_between(Rat(0), std::nullopt) == 1);
  CHECK(simplest_between(std::nullopt, Rat(0)) == -1);
  CHECK(simplest_between(Rat(-1), Rat(3)) == 0);
  CHECK(simplest_between(Rat(1, 3), Rat(1, 2)) == Rat(2, 5));
  CHECK(simplest_between(Rat(2), Rat(3)) == Rat(5, 2));
  CHECK(simplest_between(Rat(-7, 2), Rat(-3)) == Rat(-10, 3));
  CHECK(simplest_between(Rat(5, 2), std::nullopt) == 3);
  CHECK_THROWS_AS(simplest_between(Rat(1), Rat(1)), Error);
  oracle::Gen g(29);
  for (int t = 0; t < 200; ++t) {
    Rat a = g.rat(20, 40), b = g.rat(20, 40);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    const Rat s = simplest_between(a, b);
    CHECK(a < s);
    CHECK(s < b);
    // No rational with a smaller denominator fits.
    for (long q = 1; q < s.get_den().get_si(); ++q) {
      const Rat lo = a * q;
      mpz_class k;
      mpz_fdiv_q(k.get_mpz_t(), lo.get_num().get_mpz_t(), lo.get_den().get_mpz_t());
      CHECK_FALSE(Rat(k + 1, q) < b);
    }
  }
}

TEST_CASE("normalizing P1 against the perturbed curve") {
  const Rat eps(1, 4);
  const BiPoly c = construct::perturb(construct::build_csing(construct::default_params(3)), 3, eps);
  const std::vector<Piece> pieces{{"P1", mono(1, 0, 3) + mono(1, 1, 0) + mono(1, 0, 0), tri({0, 0}, {1, 0}, {0, 3})},
                                  {"C", c, tri({1, 0}, {2, 0}, {0, 3})}};
  const auto sc = normalize_pieces(pieces, subdivision_of(pieces));
  CHECK(sc[0].c == 1);
  CHECK(sc[0].lambda == 1);
  CHECK(sc[0].mu == 1);
  CHECK(sc[1].c * Rat(5, 4) * sc[1].mu * sc[1].mu * sc[1].mu == 1);
  CHECK(sc[1].c * Rat(1, 4) * sc[1].lambda == 1);
  CHECK(sc[1].lambda > 0);
  CHECK(sc[1].mu > 0);
  check_edges_match(pieces, sc);
}

TEST_CASE("opposite sign patterns cannot be matched by positive scalings") {
  const std::vector<Piece> pieces{{"A", mono(1, 0, 1) + mono(1, 1, 0) + mono(1, 0, 0), tri({0, 0}, {1, 0}, {0, 1})},
                                  {"B", mono(1, 0, 1) - mono(1, 1, 0) + mono(1, 2, 0), tri({1, 0}, {2, 0}, {0, 1})}};
  try {
    normalize_pieces(pieces, subdivision_of(pieces));
    FAIL("expected an inconsistency");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Inconsistent);
    CHECK(std::string(e.what()).find("(1,0)") != std::string::npos);
  }
  // A single piece needs nothing.
  const std::vector<Piece> one{pieces[0]};
  const auto sc = normalize_pieces(one, subdivision_of(one));
  REQUIRE(sc.size() == 1);
  CHECK(sc[0].c == 1);
  CHECK(sc[0].lambda == 1);
  CHECK(sc[0].mu == 1);
}

TEST_CASE("edges needing irrational scalings are rejected") {
  // Along (2,0)-(0,2) the ratios 1, 2 ask for g^2 = 2.
  const std::vector<Piece> pieces{
      {"A", mono(1, 0, 2) + mono(1, 2, 0) + mono(1, 0, 0), tri({0, 0}, {2, 0}, {0, 2})},
      {"B", mono(1, 0, 2) + mono(2, 2, 0) + mono(1, 2, 2), tri({2, 0}, {2, 2}, {0, 2})}};
  CHECK_THROWS_AS(normalize_pieces(pieces, subdivision_of(pieces)), Error);
}

TEST_CASE("normalization around an interior vertex") {
  // Three triangles around (1,1): the adjacency graph is a cycle.
  oracle::Gen g(41);
  const polygon::LatticePoint O{0, 0}, A{3, 0}, B{0, 3}, P{1, 1};
  const std::vector<std::array<polygon::LatticePoint, 3>> cells{{O, A, P}, {A, B, P}, {B, O, P}};
  int solved = 0, refused = 0;
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Piece> pieces;
    for (std::size_t k = 0; k < 3; ++k) {
      BiPoly p;
      for (const auto& v : cells[k])
        p += mono(Rat(static_cast<long>(1) << g.integer(0, 2)), static_cast<int>(v.i), static_cast<int>(v.j));
      pieces.push_back({"T" + std::to_string(k), p, tri(cells[k][0], cells[k][1], cells[k][2])});
    }
    // Independent oracle. In log2 space the glued function U is free only at
    // B (U(O), U(A), U(P) come from the pinned first piece); a scaling exists
    // iff U - log2|coeff| interpolates integrally on both other triangles
    // for some integer U(B). Triangle determinants are 3, so t in [-6, 6]
    // covers every residue.
    auto lg = [](const Rat& r) {
      long e = 0;
      for (Rat x = r; x != 1; x = x > 1 ? Rat(x / 2) : Rat(x * 2)) e += x > 1 ? 1 : -1;
      return e;
    };
    auto affine_integral = [](const std::array<polygon::LatticePoint, 3>& v, const std::array<long, 3>& val) {
      // s(w) = C + L i + M j through three points; integrality of L, M, C.
      const long det = (v[1].i - v[0].i) * (v[2].j - v[0].j) - (v[2].i - v[0].i) * (v[1].j - v[0].j);
      const long d1 = val[1] - val[0], d2 = val[2] - val[0];
      const Rat L = Rat(d1 * (v[2].j - v[0].j) - d2 * (v[1].j - v[0].j)) / det;
      const Rat M = Rat(d2 * (v[1].i - v[0].i) - d1 * (v[2].i - v[0].i)) / det;
      const Rat C = Rat(val[0]) - L * v[0].i - M * v[0].j;
      return L.get_den() == 1 && M.get_den() == 1 && C.get_den() == 1;
    };
    auto U0 = [&](polygon::LatticePoint w) { return lg(pieces[0].poly.coeff(static_cast<int>(w.i), static_cast<int>(w.j))); };
    bool integral = false;
    for (long t = -6; t <= 6 && !integral; ++t) {
      bool ok = true;
      for (std::size_t k = 1; k < 3; ++k) {
        std::array<long, 3> val{};
        for (std::size_t q = 0; q < 3; ++q) {
          const auto w = cells[k][q];
          const long u = w == B ? t : U0(w);
          val[q] = u - lg(pieces[k].poly.coeff(static_cast<int>(w.i), static_cast<int>(w.j)));
        }
        ok = ok && affine_integral(cells[k], val);
      }
      integral = ok;
    }
    if (integral) {
      const auto sc = normalize_pieces(pieces, subdivision_of(pieces));
      check_edges_match(pieces, sc);
      ++solved;
    } else {
      try {
        normalize_pieces(pieces, subdivision_of(pieces));
        FAIL("expected a cycle inconsistency");
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Inconsistent);
        CHECK(std::string(e.what()).find("cycle") != std::string::npos);
      }
      ++refused;
    }
  }
  CHECK(solved > 0);
  CHECK(refused > 0);
}

TEST_CASE("fiber profiles of the standard pieces") {
  const auto pieces = construct::standard_pieces(3);
  const auto p2 = fiber_profile(pieces[1].poly, Half::Positive);
  REQUIRE(p2.events.size() == 1);
  CHECK(p2.events[0].kind == EventKind::MaxTangency);
  CHECK(p2.events[0].order == 3);
  CHECK(p2.events[0].position.as_rational() == Rat(1));
  CHECK(fiber_profile(pieces[0].poly, Half::Positive).events.empty());
  const auto p1 = fiber_profile(pieces[0].poly, Half::Negative);
  REQUIRE(p1.events.size() == 1);
  CHECK(p1.events[0].position.as_rational() == Rat(-1));
  CHECK(p1.generic_counts == std::vector<int>{1, 1});
  for (int d = 3; d <= 6; ++d)
    for (const auto& p : construct::standard_pieces(d)) {
      const auto half = p.tangency_x > 0 ? Half::Positive : Half::Negative;
      const auto prof = fiber_profile(p.poly, half);
      REQUIRE(prof.events.size() == 1);
      CHECK(prof.events[0].kind == EventKind::MaxTangency);
      CHECK(prof.events[0].position.as_rational() == p.tangency_x);
    }
  CHECK_THROWS_AS(fiber_profile(mono(1, 2, 0), Half::Positive), Error);
  CHECK_THROWS_AS(fiber_profile(mono(1, 0, 2), Half::Positive), Error);
}

TEST_CASE("the perturbed curve has an all-real plateau around the certified fiber") {
  for (int d = 3; d <= 5; ++d) {
    const auto curve = construct::build_c(construct::default_params(d));
    const auto prof = fiber_profile(curve.poly, Half::Positive);
    bool found = false;
    for (const auto& e : prof.events) {
      if (e.kind != EventKind::AllReal) continue;
      CHECK(e.order == d);
      const bool above = !e.plateau_lo || e.plateau_lo->compare(curve.all_real_x) < 0;
      const bool below = !e.plateau_hi || e.plateau_hi->compare(curve.all_real_x) > 0;
      found = found || (above && below);
    }
    CHECK(found);
    // Nothing happens over the negative half.
    const auto neg = fiber_profile(curve.poly, Half::Negative);
    for (const auto& e : neg.events) CHECK(e.kind != EventKind::MaxTangency);
  }
}

TEST_CASE("generic counts are constant between events") {
  oracle::Gen g(43);
  std::vector<BiPoly> polys;
  for (int d = 3; d <= 5; ++d) {
    const auto c = construct::build_c(construct::default_params(d)).poly;
    polys.push_back(c);
    polys.push_back(construct::tilde_transform(c, d));
  }
  for (int t = 0; t < 6; ++t) polys.push_back(g.bipoly(3, static_cast<int>(g.integer(2, 4))));
  for (const auto& p : polys) {
    if (patchpencil::exactalg::resultant_y(p, p.diff_y()).is_zero()) continue;
    for (auto half : {Half::Negative, Half::Positive}) {
      const auto prof = fiber_profile(p, half);
      REQUIRE(prof.generic_counts.size() == prof.events.size() + 1);
      // Boundaries of each interval: 0, event positions (widened to rationals), infinity.
      std::vector<std::optional<Rat>> cuts;
      cuts.push_back(half == Half::Positive ? std::optional<Rat>(0) : std::nullopt);
      for (const auto& e : prof.events) {
        const auto r = e.position.refined_to(Rat(1, 1000000));
        cuts.push_back(r.lo());
        cuts.push_back(r.hi());
      }
      cuts.push_back(half == Half::Positive ? std::nullopt : std::optional<Rat>(0));
      for (std::size_t k = 0; k + 1 < cuts.size(); k += 2) {
        const auto lo = cuts[k], hi = cuts[k + 1];
        const Rat a = lo ? *lo : *hi - 100, b = hi ? *hi : *lo + 100;
        for (int s = 1; s <= 3; ++s) {
          const Rat x = a + (b - a) * s / 4;
          // Skip samples that happen to hit a critical fiber.
          const auto f = p.at_x(x);
          if (patchpencil::exactalg::gcd(f, f.derivative()).degree() > 0 || f.degree() < p.degree_y()) continue;
          CHECK(oracle::bisection_root_count(f) == prof.generic_counts[k / 2]);
        }
      }
    }
  }
}

TEST_CASE("gluing a single piece keeps its profile") {
  const auto pieces = construct::standard_pieces(3);
  const Piece p1{"P1", pieces[0].poly, tri({0, 0}, {1, 0}, {0, 3})};
  const auto prof = profile_pieces({p1});
  const auto s = glue_lscheme(prof, 3);
  REQUIRE(s.events.size() == prof[0].negative.events.size() + prof[0].positive.events.size());
  CHECK(s.zero_index == prof[0].negative.events.size());
  CHECK(s.events[0].source == "P1");
  CHECK(s.events[0].kind == prof[0].negative.events[0].kind);
  CHECK(s.word() == std::vector<std::string>{"T"});
}

TEST_CASE("fan assembly reproduces the tangency word") {
  for (int d = 3; d <= 5; ++d) {
    const auto a = assemble_fan(construct::default_params(d));
    CHECK(a.scheme.word_string() == "T T R T R T");
    std::vector<std::string> sources;
    for (const auto& e : a.scheme.events)
      if (e.kind == EventKind::MaxTangency || e.kind == EventKind::AllReal) sources.push_back(e.source);
    CHECK(sources == std::vector<std::string>{"P3", "P1", "C", "P2", "Ctilde", "P4"});
    for (const auto& e : a.scheme.events) {
      if (e.kind == EventKind::AllReal) CHECK(e.order == d);
      if (e.kind == EventKind::MaxTangency) CHECK(e.order == d);
    }
    // The two sides meet at zero_index: negative events, then positive ones.
    for (std::size_t k = 0; k < a.scheme.events.size(); ++k)
      CHECK((a.scheme.events[k].side == Half::Negative) == (k < a.scheme.zero_index));
    CHECK(a.scheme.generic_counts.size() == a.scheme.events.size() + 1);

    // Multiset of events is preserved by gluing.
    std::size_t total = 0;
    for (const auto& p : a.profiles) total += p.negative.events.size() + p.positive.events.size();
    CHECK(total == a.scheme.events.size());

    // Scalings make every shared edge agree, and max tangencies are c Y^d fibers.
    check_edges_match(a.pieces, a.scalings);
    const auto scaled = normalized(a.pieces, a.scalings);
    for (const auto& e : a.scheme.events) {
      if (e.kind != EventKind::MaxTangency) continue;
      const auto it = std::find_if(scaled.begin(), scaled.end(), [&](const Piece& p) { return p.label == e.source; });
      REQUIRE(e.position.as_rational());
      const UniPoly fiber = it->poly.at_x(*e.position.as_rational());
      CHECK(fiber.degree() == d);
      for (int k = 0; k < d; ++k) CHECK(fiber[k] == 0);
    }
  }
}

TEST_CASE("assembly errors are tagged with their stage") {
  try {
    assemble_fan(construct::default_params(2));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Precondition);
    CHECK(e.stage() == "subdivision");
  }
  auto p = construct::default_params(3);
  p.epsilon = Rat(1000000);
  p.a_grid = {Rat(2)};
  try {
    assemble_fan(p);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.stage() == "construct");
  }
}

TEST_CASE("gluing rejects shapes other than fans") {
  const auto pieces = construct::standard_pieces(3);
  const Piece off{"P1", pieces[0].poly, tri({0, 0}, {1, 0}, {0, 2})};
  CHECK_THROWS_AS(glue_lscheme(profile_pieces({off}), 3), Error);
  const Piece a{"A", pieces[0].poly, tri({0, 0}, {2, 0}, {0, 3})};
  const Piece b{"B", pieces[0].poly, tri({1, 0}, {3, 0}, {0, 3})};
  CHECK_THROWS_AS(glue_lscheme(profile_pieces({a, b}), 3), Error);
}

TEST_CASE("scheme json round trip") {
  const auto a = assemble_fan(construct::default_params(4));
  const auto j = to_json(a.scheme);
  CHECK(j["word"] == "T T R T R T");
  const auto back = lscheme_from_json(nlohmann::json::parse(j.dump()));
  REQUIRE(back.events.size() == a.scheme.events.size());
  CHECK(back.word() == a.scheme.word());
  CHECK(back.zero_index == a.scheme.zero_index);
  CHECK(back.generic_counts == a.scheme.generic_counts);
  for (std::size_t k = 0; k < back.events.size(); ++k) {
    CHECK(back.events[k].source == a.scheme.events[k].source);
    CHECK(compare(back.events[k].position, a.scheme.events[k].position) == 0);
  }
  CHECK(to_json(back).dump() == j.dump());
  CHECK_THROWS_AS(lscheme_from_json(nlohmann::json::parse(R"({"events": []})")), Error);
}

TEST_CASE("profile json round trip") {
  const auto curve = construct::build_c(construct::default_params(4));
  for (auto half : {Half::Negative, Half::Positive}) {
    const auto prof = fiber_profile(curve.poly, half);
    const auto j = to_json(prof);
    const auto back = fiber_profile_from_json(nlohmann::json::parse(j.dump()));
    CHECK(to_json(back).dump() == j.dump());
    CHECK(back.events.size() == prof.events.size());
  }
  CHECK_THROWS_AS(fiber_profile_from_json(nlohmann::json::parse(R"({"half": "up", "events": [], "generic_counts": [1]})")), Error);
}
