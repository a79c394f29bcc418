#include "patchpencil/patchwork/normalize.h"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>

#include "patchpencil/error.h"
#include "patchpencil/exactalg/rational.h"

namespace patchpencil::patchwork {

using polygon::Edge;
using polygon::LatticePoint;

BiPoly apply(const Scaling& s, const BiPoly& p) { return p.scaled(s.c, s.lambda, s.mu); }

namespace {

std::string edge_name(const Edge& e) {
  return "(" + std::to_string(e.a.i) + "," + std::to_string(e.a.j) + ")-(" + std::to_string(e.b.i) + "," +
         std::to_string(e.b.j) + ")";
}

using exactalg::BigInt;

// x, y with x a + y b = gcd(a, b) > 0.
std::pair<long, long> bezout(long a, long b) {
  long old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const long q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
    old_t -= q * t;
    std::swap(old_t, t);
  }
  if (old_r < 0) return {-old_s, -old_t};
  return {old_s, old_t};
}

// Scaling of `b` whose truncation to e equals `target`, with the smallest
// torus exponents: along the primitive direction (vi, vj) the coefficient
// ratios must form a geometric sequence r_0 g^t, and lambda = g^x, mu = g^y
// for a Bezout pair x vi + y vj = 1. nullopt when no such scaling exists.
std::optional<Scaling> solve_edge(const BiPoly& target, const BiPoly& b, const Edge& e) {
  const BiPoly tb = polygon::edge_truncation(b, e);
  const long di = e.b.i - e.a.i, dj = e.b.j - e.a.j;
  const long steps = std::gcd(std::labs(di), std::labs(dj));
  const long vi = di / steps, vj = dj / steps;
  std::vector<std::pair<long, Rat>> ratios;
  for (long t = 0; t <= steps; ++t) {
    const int i = static_cast<int>(e.a.i + t * vi), j = static_cast<int>(e.a.j + t * vj);
    const Rat ca = target.coeff(i, j), cb = tb.coeff(i, j);
    if (ca != 0) ratios.emplace_back(t, ca / cb);
  }
  const auto& [t1, r1] = ratios[1];
  const Rat step_ratio = r1 / ratios[0].second;
  const auto g = step_ratio > 0 ? exactalg::exact_root(step_ratio, static_cast<unsigned long>(t1)) : std::nullopt;
  if (!g) return std::nullopt;
  for (const auto& [t, r] : ratios)
    if (r != ratios[0].second * exactalg::pow(*g, t)) return std::nullopt;
  const auto [x, y] = bezout(vi, vj);
  Scaling s;
  s.lambda = exactalg::pow(*g, x);
  s.mu = exactalg::pow(*g, y);
  s.c = ratios[0].second / (exactalg::pow(s.lambda, e.a.i) * exactalg::pow(s.mu, e.a.j));
  return s;
}


// One monomial identity c_A a lambda_A^i mu_A^j = c_B b lambda_B^i mu_B^j.
struct Equation {
  std::size_t a, b;
  long i, j;
  Rat ratio;  // b-side coefficient over a-side coefficient, i.e. the required (c_A/c_B) (lambda_A/lambda_B)^i ...
  std::size_t edge;
};

struct SharedEdge {
  std::size_t a, b;
  Edge edge;
};

// Pairwise coprime integers > 1 such that every input factors over them.
std::vector<BigInt> coprime_base(std::vector<BigInt> xs) {
  std::vector<BigInt> base;
  for (auto& x : xs)
    if (x > 1) base.push_back(x);
  for (bool changed = true; changed;) {
    changed = false;
    std::sort(base.begin(), base.end());
    base.erase(std::unique(base.begin(), base.end()), base.end());
    for (std::size_t p = 0; p < base.size() && !changed; ++p)
      for (std::size_t q = p + 1; q < base.size() && !changed; ++q) {
        BigInt g;
        mpz_gcd(g.get_mpz_t(), base[p].get_mpz_t(), base[q].get_mpz_t());
        if (g == 1) continue;
        const BigInt x = base[p] / g, y = base[q] / g;
        base.erase(base.begin() + static_cast<long>(q));
        base.erase(base.begin() + static_cast<long>(p));
        for (const auto& v : {g, x, y})
          if (v > 1) base.push_back(v);
        changed = true;
      }
  }
  return base;
}

std::vector<BigInt> exponents(BigInt n, const std::vector<BigInt>& base) {
  std::vector<BigInt> e(base.size(), BigInt(0));
  for (std::size_t k = 0; k < base.size(); ++k)
    while (n % base[k] == 0) {
      n /= base[k];
      ++e[k];
    }
  return e;
}

// Integer solution of A x = b for several right-hand sides, via a column
// Hermite form A U = H. Returns nullopt when some right-hand side has none.
std::optional<std::vector<std::vector<BigInt>>> solve_integer(const std::vector<std::vector<BigInt>>& A,
                                                              const std::vector<std::vector<BigInt>>& rhs,
                                                              std::size_t n) {
  const std::size_t m = A.size();
  std::vector<std::vector<BigInt>> H = A;
  std::vector<std::vector<BigInt>> U(n, std::vector<BigInt>(n, BigInt(0)));
  for (std::size_t k = 0; k < n; ++k) U[k][k] = 1;
  auto col_op = [&](std::size_t c1, std::size_t c2, const BigInt& p, const BigInt& q, const BigInt& r,
                    const BigInt& s) {
    // (col c1, col c2) <- (p c1 + q c2, r c1 + s c2), unimodular when ps - qr = +-1.
    for (auto* M : {&H, &U})
      for (auto& row : *M) {
        const BigInt x = row[c1], y = row[c2];
        row[c1] = p * x + q * y;
        row[c2] = r * x + s * y;
      }
  };
  std::vector<std::optional<std::size_t>> pivot_col(m);
  std::size_t next = 0;
  for (std::size_t r = 0; r < m && next < n; ++r) {
    for (std::size_t c = next + 1; c < n; ++c) {
      if (H[r][c] == 0) continue;
      const BigInt a = H[r][next], b = H[r][c];
      BigInt g, x, y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      col_op(next, c, x, y, BigInt(-b / g), BigInt(a / g));
    }
    if (H[r][next] != 0) pivot_col[r] = next++;
  }
  std::vector<std::vector<BigInt>> out;
  for (const auto& b : rhs) {
    std::vector<BigInt> y(n, BigInt(0));
    for (std::size_t r = 0; r < m; ++r) {
      BigInt acc = b[r];
      for (std::size_t c = 0; c < n; ++c)
        if (!pivot_col[r] || c != *pivot_col[r]) acc -= H[r][c] * y[c];
      if (pivot_col[r]) {
        const std::size_t c = *pivot_col[r];
        if (acc % H[r][c] != 0) return std::nullopt;
        y[c] = acc / H[r][c];
      } else if (acc != 0) {
        return std::nullopt;
      }
    }
    std::vector<BigInt> x(n, BigInt(0));
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t c = 0; c < n; ++c) x[k] += U[k][c] * y[c];
    out.push_back(std::move(x));
  }
  return out;
}

struct Solution {
  std::vector<int> sign;
  std::vector<Scaling> scaling;
};

// Exact solve of the sign system over {+-1} and the magnitude system in
// exponent coordinates over a coprime base of all coefficient ratios.
std::optional<Solution> solve(const std::vector<Equation>& eqs, std::size_t pieces) {
  // Signs: s_a s_b = sign(ratio); propagate, then check.
  std::vector<int> sign(pieces, 0);
  for (bool progress = true; progress;) {
    progress = false;
    for (const auto& e : eqs) {
      const int want = sgn(e.ratio);
      if (sign[e.a] == 0 && sign[e.b] == 0) continue;
      if (sign[e.a] != 0 && sign[e.b] != 0) {
        if (sign[e.a] * sign[e.b] != want) return std::nullopt;
        continue;
      }
      if (sign[e.a] == 0) sign[e.a] = want * sign[e.b];
      else sign[e.b] = want * sign[e.a];
      progress = true;
    }
    if (!progress)
      for (std::size_t k = 0; k < pieces; ++k)
        if (sign[k] == 0) {
          sign[k] = 1;
          progress = true;
          break;
        }
  }
  std::vector<BigInt> ints;
  for (const auto& e : eqs) {
    ints.push_back(abs(e.ratio.get_num()));
    ints.push_back(e.ratio.get_den());
  }
  const auto base = coprime_base(ints);
  // Unknowns per piece k: |c| at 3k, lambda at 3k+1, mu at 3k+2 (as exponent vectors).
  const std::size_t n = 3 * pieces;
  std::vector<std::vector<BigInt>> A;
  std::vector<std::vector<BigInt>> rhs(base.size());
  for (const auto& e : eqs) {
    std::vector<BigInt> row(n, BigInt(0));
    row[3 * e.a] += 1;
    row[3 * e.a + 1] += e.i;
    row[3 * e.a + 2] += e.j;
    row[3 * e.b] -= 1;
    row[3 * e.b + 1] -= e.i;
    row[3 * e.b + 2] -= e.j;
    A.push_back(std::move(row));
    const auto num = exponents(abs(e.ratio.get_num()), base), den = exponents(e.ratio.get_den(), base);
    for (std::size_t k = 0; k < base.size(); ++k) rhs[k].push_back(num[k] - den[k]);
  }
  if (base.empty()) rhs.emplace_back(eqs.size(), BigInt(0));
  const auto x = solve_integer(A, rhs, n);
  if (!x) return std::nullopt;
  Solution sol{sign, std::vector<Scaling>(pieces)};
  for (std::size_t k = 0; k < base.size(); ++k)
    for (std::size_t p = 0; p < pieces; ++p) {
      const Rat b(base[k]);
      sol.scaling[p].c *= exactalg::pow(b, (*x)[k][3 * p].get_si());
      sol.scaling[p].lambda *= exactalg::pow(b, (*x)[k][3 * p + 1].get_si());
      sol.scaling[p].mu *= exactalg::pow(b, (*x)[k][3 * p + 2].get_si());
    }
  for (std::size_t p = 0; p < pieces; ++p) sol.scaling[p].c *= sign[p];
  return sol;
}

}  // namespace

std::vector<Scaling> normalize_pieces(const std::vector<Piece>& pieces, const polygon::Subdivision& s) {
  polygon::validate_subdivision(s);
  if (pieces.size() != s.cells.size()) fail(ErrorKind::Precondition, "one piece per subdivision cell is required");
  for (const auto& p : pieces) {
    const auto& cell = s.cell(p.label);
    if (!(cell.polygon == p.cell)) fail(ErrorKind::Precondition, "piece " + p.label + " does not sit on its cell");
    if (p.poly.is_zero() || !p.cell.contains(polygon::newton_polygon(p.poly)))
      fail(ErrorKind::Precondition, "Newton polygon of " + p.label + " leaves its cell");
  }
  const std::size_t n = pieces.size();
  std::vector<SharedEdge> edges;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (auto e = polygon::shared_edge(pieces[a].cell, pieces[b].cell)) edges.push_back({a, b, *e});

  // Spanning forest first, so that a failure can be pinned on the cycle closed by a non-tree edge.
  std::vector<std::size_t> root(n);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](std::size_t v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  std::vector<std::size_t> tree, rest;
  std::vector<std::vector<std::size_t>> tree_adj(n);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto ra = find(edges[k].a), rb = find(edges[k].b);
    if (ra != rb) {
      root[ra] = rb;
      tree.push_back(k);
      tree_adj[edges[k].a].push_back(edges[k].b);
      tree_adj[edges[k].b].push_back(edges[k].a);
    } else {
      rest.push_back(k);
    }
  }

  std::vector<Equation> eqs;
  auto add_edge = [&](std::size_t k) {
    const auto& se = edges[k];
    const std::string names = pieces[se.a].label + " and " + pieces[se.b].label;
    const BiPoly ta = polygon::edge_truncation(pieces[se.a].poly, se.edge);
    const BiPoly tb = polygon::edge_truncation(pieces[se.b].poly, se.edge);
    std::set<exactalg::Exponent> sa, sb;
    for (const auto& [e, c] : ta.terms()) sa.insert(e);
    for (const auto& [e, c] : tb.terms()) sb.insert(e);
    if (sa != sb)
      fail(ErrorKind::Inconsistent, "edge " + edge_name(se.edge) + " between " + names + ": truncation supports differ");
    if (!sa.count(polygon::to_exponent(se.edge.a)) || !sa.count(polygon::to_exponent(se.edge.b)))
      fail(ErrorKind::Inconsistent, "edge " + edge_name(se.edge) + " between " + names + ": endpoints missing from support");
    for (const auto& [e, c] : ta.terms()) eqs.push_back({se.a, se.b, e.first, e.second, tb.coeff(e.first, e.second) / c, k});
  };

  // Propagate along the forest: each tree edge fixes one fresh piece.
  std::vector<Scaling> out(n);
  {
    std::vector<bool> seen(n, false);
    for (std::size_t r = 0; r < n; ++r) {
      if (seen[r]) continue;
      seen[r] = true;
      std::vector<std::size_t> stack{r};
      while (!stack.empty()) {
        const auto v = stack.back();
        stack.pop_back();
        for (const auto k : tree) {
          const auto& se = edges[k];
          if ((se.a != v && se.b != v) || (seen[se.a] && seen[se.b])) continue;
          const std::size_t w = se.a == v ? se.b : se.a;
          add_edge(k);
          const BiPoly target = polygon::edge_truncation(apply(out[v], pieces[v].poly), se.edge);
          const auto sc = solve_edge(target, pieces[w].poly, se.edge);
          if (!sc)
            fail(ErrorKind::Inconsistent, "edge " + edge_name(se.edge) + " between " + pieces[se.a].label + " and " +
                                              pieces[se.b].label +
                                              ": no positive torus scaling matches the sign pattern and coefficients");
          out[w] = *sc;
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  if (rest.empty()) return out;

  for (const auto k : rest) {
    add_edge(k);
    if (solve(eqs, n)) continue;
    // Tree path between the endpoints closes the offending cycle.
    std::vector<long> parent(n, -1);
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{edges[k].a};
    seen[edges[k].a] = true;
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      for (auto w : tree_adj[v])
        if (!seen[w]) {
          seen[w] = true;
          parent[w] = static_cast<long>(v);
          stack.push_back(w);
        }
    }
    std::string cycle;
    for (long v = static_cast<long>(edges[k].b); v != -1; v = parent[static_cast<std::size_t>(v)])
      cycle += pieces[static_cast<std::size_t>(v)].label + " -> ";
    cycle += pieces[edges[k].b].label;
    fail(ErrorKind::Inconsistent, "inconsistent scalings around the cycle " + cycle + " (closing edge " +
                                      edge_name(edges[k].edge) + ")");
  }
  // Cycles: the tree choice above may not close up, so solve the whole system.
  out = solve(eqs, n)->scaling;
  // Gauge: every component's first piece keeps the identity scaling.
  std::vector<std::optional<Scaling>> first(n);
  for (std::size_t v = 0; v < n; ++v) {
    auto& f = first[find(v)];
    if (!f) f = out[v];
    out[v] = {out[v].c / f->c, out[v].lambda / f->lambda, out[v].mu / f->mu};
  }
  return out;
}

std::vector<Piece> normalized(const std::vector<Piece>& pieces, const std::vector<Scaling>& scalings) {
  if (pieces.size() != scalings.size()) fail(ErrorKind::Precondition, "one scaling per piece is required");
  std::vector<Piece> out;
  for (std::size_t i = 0; i < pieces.size(); ++i)
    out.push_back({pieces[i].label, apply(scalings[i], pieces[i].poly), pieces[i].cell});
  return out;
}

}  // namespace patchpencil::patchwork
