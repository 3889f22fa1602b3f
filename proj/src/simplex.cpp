// Copyright the qhamming developers.
// SPDX-License-Identifier: Apache-2.0
#include "qhamming/simplex.hpp"

#include <cmath>
#include <limits>

#include "qhamming/errors.hpp"

namespace qhm::lp {
namespace {

constexpr double kPivotTol = 1e-9;
constexpr double kCostTol = 1e-9;
constexpr double kFeasTol = 1e-7;

struct Tableau {
  RealMatrix t;             // m x (n + m): original + artificial columns
  RVec rhs;                 // >= 0 throughout
  std::vector<int> basis;   // basis column per row
  std::vector<bool> active; // rows not yet identified as redundant
  int n = 0, m = 0;

  void pivot(int r, int col) {
    const double p = t(r, col);
    t.row(r) /= p;
    rhs(r) /= p;
    t(r, col) = 1.0;  // kill roundoff on the pivot itself
    for (int i = 0; i < m; ++i) {
      if (i == r || std::abs(t(i, col)) < 1e-300) continue;
      const double f = t(i, col);
      t.row(i) -= f * t.row(r);
      rhs(i) -= f * rhs(r);
      t(i, col) = 0.0;
    }
    basis[r] = col;
  }
};

//! One simplex phase with Bland's rule.  `cost` spans all columns; columns
//! with `banned` set are never brought into the basis.  Returns optimal or
//! unbounded (or iteration_limit).
Status run_phase(Tableau& tab, const RVec& cost, const std::vector<bool>& banned, int& iters_left) {
  const int width = tab.n + tab.m;
  while (iters_left-- > 0) {
    // Reduced costs from scratch: small dense problems, and recomputing
    // sidesteps drift in a long degenerate pivot sequence.
    RVec y = RVec::Zero(tab.m);
    for (int i = 0; i < tab.m; ++i)
      if (tab.active[i]) y(i) = cost(tab.basis[i]);
    int enter = -1;
    for (int j = 0; j < width; ++j) {
      if (banned[j]) continue;
      double red = cost(j);
      for (int i = 0; i < tab.m; ++i)
        if (tab.active[i]) red -= y(i) * tab.t(i, j);
      if (red < -kCostTol) {
        enter = j;
        break;  // Bland: smallest eligible index enters
      }
    }
    if (enter < 0) return Status::optimal;

    int leave = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (int i = 0; i < tab.m; ++i) {
      if (!tab.active[i] || tab.t(i, enter) <= kPivotTol) continue;
      const double ratio = tab.rhs(i) / tab.t(i, enter);
      if (ratio < best_ratio - 1e-12 ||
          (ratio < best_ratio + 1e-12 && (leave < 0 || tab.basis[i] < tab.basis[leave]))) {
        best_ratio = ratio;
        leave = i;
      }
    }
    if (leave < 0) return Status::unbounded;
    tab.pivot(leave, enter);
  }
  return Status::iteration_limit;
}

}  // namespace

Solution solve_standard(RealMatrix A, RVec b, RVec c, int max_iters) {
  const int m = static_cast<int>(A.rows());
  const int n = static_cast<int>(A.cols());
  if (b.size() != m || c.size() != n) throw ValidationError("solve_standard: shape mismatch");
  if (!A.allFinite() || !b.allFinite() || !c.allFinite())
    throw ValidationError("solve_standard: non-finite data");

  std::vector<double> row_sign(m, 1.0);
  for (int i = 0; i < m; ++i)
    if (b(i) < 0) {
      A.row(i) *= -1.0;
      b(i) *= -1.0;
      row_sign[i] = -1.0;
    }

  Tableau tab;
  tab.n = n;
  tab.m = m;
  tab.t = RealMatrix::Zero(m, n + m);
  tab.t.leftCols(n) = A;
  tab.t.rightCols(m) = RealMatrix::Identity(m, m);
  tab.rhs = b;
  tab.basis.resize(m);
  tab.active.assign(m, true);
  for (int i = 0; i < m; ++i) tab.basis[i] = n + i;

  Solution sol;
  int iters_left = max_iters;

  // Phase 1: minimize the artificial mass.
  RVec phase1_cost = RVec::Zero(n + m);
  phase1_cost.tail(m).setOnes();
  std::vector<bool> none(n + m, false);
  Status st = run_phase(tab, phase1_cost, none, iters_left);
  if (st == Status::iteration_limit) {
    sol.status = st;
    return sol;
  }
  double artificial_mass = 0.0;
  for (int i = 0; i < m; ++i)
    if (tab.basis[i] >= n) artificial_mass += tab.rhs(i);
  if (artificial_mass > kFeasTol) {
    sol.status = Status::infeasible;
    return sol;
  }
  // Drive remaining artificials out of the basis; rows that cannot pivot on
  // any original column are redundant equalities and get retired.
  for (int i = 0; i < m; ++i) {
    if (tab.basis[i] < n) continue;
    int col = -1;
    for (int j = 0; j < n; ++j)
      if (std::abs(tab.t(i, j)) > kPivotTol) {
        col = j;
        break;
      }
    if (col >= 0)
      tab.pivot(i, col);
    else
      tab.active[i] = false;
  }

  // Phase 2 on the original objective, artificial columns banned.
  RVec phase2_cost = RVec::Zero(n + m);
  phase2_cost.head(n) = c;
  std::vector<bool> banned(n + m, false);
  for (int j = n; j < n + m; ++j) banned[j] = true;
  st = run_phase(tab, phase2_cost, banned, iters_left);
  sol.status = st;
  if (st != Status::optimal) return sol;

  sol.x = RVec::Zero(n);
  for (int i = 0; i < m; ++i)
    if (tab.active[i] && tab.basis[i] < n) sol.x(tab.basis[i]) = tab.rhs(i);
  sol.objective = c.dot(sol.x);

  // Dual multipliers: minimum-norm solution of A_B^T y = c_B over the basis
  // columns of the (sign-normalized) A, then undo the row flips.
  std::vector<int> cols;
  for (int i = 0; i < m; ++i)
    if (tab.active[i] && tab.basis[i] < n) cols.push_back(tab.basis[i]);
  RealMatrix bt(cols.size(), m);
  RVec cb(cols.size());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    bt.row(k) = A.col(cols[k]).transpose();
    cb(k) = c(cols[k]);
  }
  RVec y = bt.completeOrthogonalDecomposition().solve(cb);
  sol.dual = RVec(m);
  for (int i = 0; i < m; ++i) sol.dual(i) = row_sign[i] * y(i);
  return sol;
}

int Problem::add_variable(bool nonneg) {
  nonneg_.push_back(nonneg);
  obj_.push_back(0.0);
  return static_cast<int>(nonneg_.size()) - 1;
}

void Problem::objective_coeff(int var, double coeff) { obj_.at(var) = coeff; }

void Problem::add_constraint(const std::vector<std::pair<int, double>>& terms, Rel rel, double rhs) {
  for (const auto& [v, coef] : terms) {
    (void)coef;
    if (v < 0 || v >= variables()) throw ValidationError("constraint references unknown variable");
  }
  rows_.push_back(terms);
  rels_.push_back(rel);
  rhs_.push_back(rhs);
}

Solution Problem::run(bool maximize, int max_iters) const {
  const int nv = variables();
  const int mc = constraints();
  // Column layout: [var columns (1 or 2 per variable)] + [slack columns].
  std::vector<int> pos_col(nv), neg_col(nv, -1);
  int ncols = 0;
  for (int v = 0; v < nv; ++v) {
    pos_col[v] = ncols++;
    if (!nonneg_[v]) neg_col[v] = ncols++;
  }
  int nslack = 0;
  for (Rel r : rels_)
    if (r != Rel::eq) ++nslack;
  const int total = ncols + nslack;

  RealMatrix A = RealMatrix::Zero(mc, total);
  RVec b(mc), c = RVec::Zero(total);
  for (int v = 0; v < nv; ++v) {
    const double coef = maximize ? -obj_[v] : obj_[v];
    c(pos_col[v]) = coef;
    if (neg_col[v] >= 0) c(neg_col[v]) = -coef;
  }
  int slack = ncols;
  for (int i = 0; i < mc; ++i) {
    for (const auto& [v, coef] : rows_[i]) {
      A(i, pos_col[v]) += coef;
      if (neg_col[v] >= 0) A(i, neg_col[v]) -= coef;
    }
    b(i) = rhs_[i];
    if (rels_[i] == Rel::le)
      A(i, slack++) = 1.0;
    else if (rels_[i] == Rel::ge)
      A(i, slack++) = -1.0;
  }

  Solution inner = solve_standard(std::move(A), std::move(b), std::move(c), max_iters);
  Solution out;
  out.status = inner.status;
  if (inner.status != Status::optimal) return out;
  out.x = RVec(nv);
  for (int v = 0; v < nv; ++v)
    out.x(v) = inner.x(pos_col[v]) - (neg_col[v] >= 0 ? inner.x(neg_col[v]) : 0.0);
  out.objective = maximize ? -inner.objective : inner.objective;
  out.dual = maximize ? RVec(-inner.dual) : inner.dual;
  return out;
}

}  // namespace qhm::lp
