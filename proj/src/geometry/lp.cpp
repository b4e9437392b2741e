#include "ltireach/geometry/lp.hpp"

#include <stdexcept>

namespace ltireach {

int LinearProgram::add_var(bool is_free) {
  free_var.push_back(is_free);
  for (auto& c : constraints) c.coeffs.conservativeResize(num_vars + 1), c.coeffs(num_vars) = Rat(0);
  if (objective) objective->conservativeResize(num_vars + 1), (*objective)(num_vars) = Rat(0);
  return num_vars++;
}

void LinearProgram::add(RatVector coeffs, Relation rel, Rat rhs) {
  if (coeffs.size() != num_vars) throw std::invalid_argument("constraint width does not match variable count");
  constraints.push_back({std::move(coeffs), rel, std::move(rhs)});
}

void LinearProgram::add_sparse(const std::vector<std::pair<int, Rat>>& terms, Relation rel, Rat rhs) {
  RatVector c = RatVector::Constant(num_vars, Rat(0));
  for (const auto& [j, v] : terms) c(j) += v;
  add(std::move(c), rel, std::move(rhs));
}

namespace {

struct Tableau {
  // rows_[i] has ncols + 1 entries; the last is the right-hand side.
  std::vector<std::vector<Rat>> rows;
  std::vector<Rat> profit;  // reduced profits c_j - z_j, plus -objective value at the end
  std::vector<int> basis;
  int ncols = 0;

  void pivot(int p, int q) {
    auto& prow = rows[static_cast<std::size_t>(p)];
    const Rat inv = prow[static_cast<std::size_t>(q)].inverse();
    std::vector<int> nz;
    for (int j = 0; j <= ncols; ++j) {
      auto& x = prow[static_cast<std::size_t>(j)];
      if (x.is_zero()) continue;
      x *= inv;
      nz.push_back(j);
    }
    auto eliminate = [&](std::vector<Rat>& row) {
      const Rat f = row[static_cast<std::size_t>(q)];
      if (f.is_zero()) return;
      for (int j : nz) row[static_cast<std::size_t>(j)] -= f * prow[static_cast<std::size_t>(j)];
    };
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (static_cast<int>(i) != p) eliminate(rows[i]);
    eliminate(profit);
    basis[static_cast<std::size_t>(p)] = q;
  }

  void set_objective(const std::vector<Rat>& cost) {
    profit.assign(static_cast<std::size_t>(ncols) + 1, Rat(0));
    for (int j = 0; j < ncols; ++j) profit[static_cast<std::size_t>(j)] = cost[static_cast<std::size_t>(j)];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Rat cb = cost[static_cast<std::size_t>(basis[i])];
      if (cb.is_zero()) continue;
      for (int j = 0; j <= ncols; ++j) profit[static_cast<std::size_t>(j)] -= cb * rows[i][static_cast<std::size_t>(j)];
    }
  }

  // Returns false if unbounded.
  bool optimize(const std::vector<bool>& allowed) {
    while (true) {
      int q = -1;
      for (int j = 0; j < ncols; ++j)
        if (allowed[static_cast<std::size_t>(j)] && profit[static_cast<std::size_t>(j)].sign() > 0) {
          q = j;
          break;
        }
      if (q < 0) return true;
      int p = -1;
      Rat best;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const Rat& a = rows[i][static_cast<std::size_t>(q)];
        if (a.sign() <= 0) continue;
        const Rat ratio = rows[i][static_cast<std::size_t>(ncols)] / a;
        if (p < 0 || ratio < best || (ratio == best && basis[i] < basis[static_cast<std::size_t>(p)])) {
          p = static_cast<int>(i);
          best = ratio;
        }
      }
      if (p < 0) return false;
      pivot(p, q);
    }
  }
};

}  // namespace

LpResult lp_solve(const LinearProgram& lp) {
  const int n = lp.num_vars;
  const int m = static_cast<int>(lp.constraints.size());
  // Column layout: structural (free variables split into +/-), slacks, artificials.
  std::vector<int> pos_col(static_cast<std::size_t>(n)), neg_col(static_cast<std::size_t>(n), -1);
  int ncols = 0;
  for (int j = 0; j < n; ++j) {
    pos_col[static_cast<std::size_t>(j)] = ncols++;
    if (lp.free_var[static_cast<std::size_t>(j)]) neg_col[static_cast<std::size_t>(j)] = ncols++;
  }
  const int nstruct = ncols;
  std::vector<int> slack_col(static_cast<std::size_t>(m), -1);
  for (int i = 0; i < m; ++i)
    if (lp.constraints[static_cast<std::size_t>(i)].rel != Relation::Equal) slack_col[static_cast<std::size_t>(i)] = ncols++;

  std::vector<int> sign(static_cast<std::size_t>(m), 1);
  std::vector<int> unit_col(static_cast<std::size_t>(m), -1);
  std::vector<bool> needs_art(static_cast<std::size_t>(m), false);
  for (int i = 0; i < m; ++i) {
    const auto& c = lp.constraints[static_cast<std::size_t>(i)];
    if (c.rhs.sign() < 0) sign[static_cast<std::size_t>(i)] = -1;
    const int slack_coef = c.rel == Relation::LessEq ? 1 : (c.rel == Relation::GreaterEq ? -1 : 0);
    if (slack_coef * sign[static_cast<std::size_t>(i)] > 0) unit_col[static_cast<std::size_t>(i)] = slack_col[static_cast<std::size_t>(i)];
    else needs_art[static_cast<std::size_t>(i)] = true;
  }
  const int first_art = ncols;
  for (int i = 0; i < m; ++i)
    if (needs_art[static_cast<std::size_t>(i)]) unit_col[static_cast<std::size_t>(i)] = ncols++;

  Tableau t;
  t.ncols = ncols;
  t.rows.assign(static_cast<std::size_t>(m), std::vector<Rat>(static_cast<std::size_t>(ncols) + 1, Rat(0)));
  t.basis.assign(static_cast<std::size_t>(m), -1);
  for (int i = 0; i < m; ++i) {
    const auto& c = lp.constraints[static_cast<std::size_t>(i)];
    if (c.coeffs.size() != n) throw std::invalid_argument("constraint width does not match variable count");
    auto& row = t.rows[static_cast<std::size_t>(i)];
    const Rat s(sign[static_cast<std::size_t>(i)]);
    for (int j = 0; j < n; ++j) {
      if (c.coeffs(j).is_zero()) continue;
      row[static_cast<std::size_t>(pos_col[static_cast<std::size_t>(j)])] = s * c.coeffs(j);
      if (neg_col[static_cast<std::size_t>(j)] >= 0) row[static_cast<std::size_t>(neg_col[static_cast<std::size_t>(j)])] = -s * c.coeffs(j);
    }
    if (slack_col[static_cast<std::size_t>(i)] >= 0)
      row[static_cast<std::size_t>(slack_col[static_cast<std::size_t>(i)])] = s * Rat(c.rel == Relation::LessEq ? 1 : -1);
    if (needs_art[static_cast<std::size_t>(i)]) row[static_cast<std::size_t>(unit_col[static_cast<std::size_t>(i)])] = Rat(1);
    row[static_cast<std::size_t>(ncols)] = s * c.rhs;
    t.basis[static_cast<std::size_t>(i)] = unit_col[static_cast<std::size_t>(i)];
  }

  LpResult result;
  std::vector<bool> allowed(static_cast<std::size_t>(ncols), true);

  // Phase 1: maximize -sum(artificials).
  if (first_art < ncols) {
    std::vector<Rat> cost(static_cast<std::size_t>(ncols), Rat(0));
    for (int j = first_art; j < ncols; ++j) cost[static_cast<std::size_t>(j)] = Rat(-1);
    t.set_objective(cost);
    t.optimize(allowed);
    if (t.profit[static_cast<std::size_t>(ncols)].sign() != 0) {
      result.status = LpStatus::Infeasible;
      return result;
    }
    // Drive zero-valued artificials out of the basis where possible.
    for (int i = 0; i < m; ++i) {
      if (t.basis[static_cast<std::size_t>(i)] < first_art) continue;
      for (int j = 0; j < first_art; ++j)
        if (!t.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].is_zero()) {
          t.pivot(i, j);
          break;
        }
    }
    for (int j = first_art; j < ncols; ++j) allowed[static_cast<std::size_t>(j)] = false;
  }

  // Phase 2.
  std::vector<Rat> cost(static_cast<std::size_t>(ncols), Rat(0));
  if (lp.objective) {
    if (lp.objective->size() != n) throw std::invalid_argument("objective width does not match variable count");
    for (int j = 0; j < n; ++j) {
      cost[static_cast<std::size_t>(pos_col[static_cast<std::size_t>(j)])] = (*lp.objective)(j);
      if (neg_col[static_cast<std::size_t>(j)] >= 0) cost[static_cast<std::size_t>(neg_col[static_cast<std::size_t>(j)])] = -(*lp.objective)(j);
    }
  }
  t.set_objective(cost);
  if (!t.optimize(allowed)) {
    result.status = LpStatus::Unbounded;
  } else {
    result.status = LpStatus::Optimal;
  }

  std::vector<Rat> colval(static_cast<std::size_t>(ncols), Rat(0));
  for (int i = 0; i < m; ++i) colval[static_cast<std::size_t>(t.basis[static_cast<std::size_t>(i)])] = t.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(ncols)];
  result.point = RatVector::Constant(n, Rat(0));
  for (int j = 0; j < n; ++j) {
    Rat v = colval[static_cast<std::size_t>(pos_col[static_cast<std::size_t>(j)])];
    if (neg_col[static_cast<std::size_t>(j)] >= 0) v -= colval[static_cast<std::size_t>(neg_col[static_cast<std::size_t>(j)])];
    result.point(j) = v;
  }
  (void)nstruct;
  if (result.status == LpStatus::Optimal) {
    result.value = -t.profit[static_cast<std::size_t>(ncols)];
    result.duals = RatVector::Constant(m, Rat(0));
    for (int i = 0; i < m; ++i)
      result.duals(i) = Rat(sign[static_cast<std::size_t>(i)]) * -t.profit[static_cast<std::size_t>(unit_col[static_cast<std::size_t>(i)])];
  }
  return result;
}

bool verify_lp_optimality(const LinearProgram& lp, const LpResult& r) {
  if (r.status != LpStatus::Optimal) return false;
  const int n = lp.num_vars;
  for (int j = 0; j < n; ++j)
    if (!lp.free_var[static_cast<std::size_t>(j)] && r.point(j).sign() < 0) return false;
  for (const auto& c : lp.constraints) {
    const Rat lhs = c.coeffs.dot(r.point);
    if (c.rel == Relation::LessEq && lhs > c.rhs) return false;
    if (c.rel == Relation::GreaterEq && lhs < c.rhs) return false;
    if (c.rel == Relation::Equal && lhs != c.rhs) return false;
  }
  const RatVector obj = lp.objective ? *lp.objective : RatVector::Constant(n, Rat(0));
  if (obj.dot(r.point) != r.value) return false;
  Rat dual_value(0);
  RatVector aty = RatVector::Constant(n, Rat(0));
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    const auto& c = lp.constraints[i];
    const Rat& y = r.duals(static_cast<Eigen::Index>(i));
    if (c.rel == Relation::LessEq && y.sign() < 0) return false;
    if (c.rel == Relation::GreaterEq && y.sign() > 0) return false;
    dual_value += y * c.rhs;
    aty += c.coeffs * y;
  }
  for (int j = 0; j < n; ++j) {
    if (lp.free_var[static_cast<std::size_t>(j)] ? aty(j) != obj(j) : aty(j) < obj(j)) return false;
  }
  return dual_value == r.value;
}

}  // namespace ltireach
