#include "patchpencil/polygon/exact_lp.h"

#include <optional>

#include "patchpencil/error.h"

namespace patchpencil::polygon {

using exactalg::Rat;

namespace {

struct Tableau {
  std::vector<std::vector<Rat>> rows;  // last entry is the right-hand side
  std::vector<std::size_t> basis;
  std::size_t cols = 0;

  const Rat& rhs(std::size_t r) const { return rows[r][cols]; }

  void pivot(std::size_t r, std::size_t c) {
    const Rat p = rows[r][c];
    for (auto& v : rows[r]) v /= p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rat f = rows[i][c];
      for (std::size_t k = 0; k <= cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    basis[r] = c;
  }

  Rat value(const std::vector<Rat>& cost) const {
    Rat v = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) v += cost[basis[r]] * rhs(r);
    return v;
  }

  // Returns false when unbounded.
  bool optimize(const std::vector<Rat>& cost, std::size_t allowed_cols) {
    for (;;) {
      std::optional<std::size_t> enter;
      for (std::size_t c = 0; c < allowed_cols && !enter; ++c) {
        Rat reduced = cost[c];
        for (std::size_t r = 0; r < rows.size(); ++r) reduced -= cost[basis[r]] * rows[r][c];
        if (reduced > 0) enter = c;
      }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      Rat best;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r][*enter] <= 0) continue;
        const Rat ratio = rhs(r) / rows[r][*enter];
        if (!leave || ratio < best || (ratio == best && basis[r] < basis[*leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }
};

}  // namespace

LpSolution maximize(const LinearProgram& lp) {
  const std::size_t n = lp.num_vars;
  if (lp.objective.size() != n) fail(ErrorKind::Precondition, "objective length differs from variable count");
  std::size_t slacks = 0, artificials = 0;
  for (const auto& c : lp.constraints) {
    if (c.coeffs.size() != n) fail(ErrorKind::Precondition, "constraint length differs from variable count");
    const bool flip = c.rhs < 0;
    Relation rel = c.relation;
    if (flip && rel != Relation::Equal) rel = rel == Relation::LessEq ? Relation::GreaterEq : Relation::LessEq;
    if (rel != Relation::Equal) ++slacks;
    if (rel != Relation::LessEq) ++artificials;
  }
  Tableau t;
  t.cols = n + slacks + artificials;
  const std::size_t art_begin = n + slacks;
  std::size_t next_slack = n, next_art = art_begin;
  for (const auto& c : lp.constraints) {
    const bool flip = c.rhs < 0;
    Relation rel = c.relation;
    if (flip && rel != Relation::Equal) rel = rel == Relation::LessEq ? Relation::GreaterEq : Relation::LessEq;
    std::vector<Rat> row(t.cols + 1, Rat(0));
    for (std::size_t k = 0; k < n; ++k) row[k] = flip ? Rat(-c.coeffs[k]) : c.coeffs[k];
    row[t.cols] = flip ? Rat(-c.rhs) : c.rhs;
    if (rel == Relation::LessEq) {
      row[next_slack] = 1;
      t.basis.push_back(next_slack++);
    } else {
      if (rel == Relation::GreaterEq) row[next_slack++] = -1;
      row[next_art] = 1;
      t.basis.push_back(next_art++);
    }
    t.rows.push_back(std::move(row));
  }

  if (artificials > 0) {
    std::vector<Rat> phase1(t.cols, Rat(0));
    for (std::size_t k = art_begin; k < t.cols; ++k) phase1[k] = -1;
    t.optimize(phase1, t.cols);
    if (t.value(phase1) < 0) return {LpStatus::Infeasible, {}, 0};
    // Drive zero-valued artificials out of the basis; drop redundant rows.
    for (std::size_t r = 0; r < t.rows.size();) {
      if (t.basis[r] < art_begin) {
        ++r;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t c = 0; c < art_begin && !col; ++c)
        if (t.rows[r][c] != 0) col = c;
      if (col) {
        t.pivot(r, *col);
        ++r;
      } else {
        t.rows.erase(t.rows.begin() + static_cast<long>(r));
        t.basis.erase(t.basis.begin() + static_cast<long>(r));
      }
    }
  }

  std::vector<Rat> cost(t.cols, Rat(0));
  for (std::size_t k = 0; k < n; ++k) cost[k] = lp.objective[k];
  if (!t.optimize(cost, art_begin)) return {LpStatus::Unbounded, {}, 0};
  LpSolution sol{LpStatus::Optimal, std::vector<Rat>(n, Rat(0)), 0};
  for (std::size_t r = 0; r < t.rows.size(); ++r)
    if (t.basis[r] < n) sol.x[t.basis[r]] = t.rhs(r);
  for (std::size_t k = 0; k < n; ++k) sol.value += lp.objective[k] * sol.x[k];
  return sol;
}

}  // namespace patchpencil::polygon
