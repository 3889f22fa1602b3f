// Copyright the qhamming developers.
// SPDX-License-Identifier: Apache-2.0
#ifndef QHAMMING_SIMPLEX_HPP
#define QHAMMING_SIMPLEX_HPP

#include <utility>
#include <vector>

#include "qhamming/tensor.hpp"

namespace qhm::lp {

enum class Status { optimal, infeasible, unbounded, iteration_limit };

struct Solution {
  Status status = Status::iteration_limit;
  RVec x;            // primal solution (original variable order)
  double objective = 0.0;
  RVec dual;         // one multiplier per constraint, b . dual = objective
};

//! Dense two-phase primal simplex with Bland's rule for
//!   min c.x  s.t.  A x = b, x >= 0.
//! Small instances only; the pivot tolerance is 1e-9 on coefficients of
//! order one.  Bland's rule trades speed for guaranteed termination on the
//! degenerate transportation bases that show up here.
Solution solve_standard(RealMatrix A, RVec b, RVec c, int max_iters = 200000);

enum class Rel { eq, le, ge };

//! Small modelling layer over solve_standard: free variables are split
//! into differences, inequalities get slack columns, duals are mapped back
//! to the original constraint order (so b . dual = optimal objective for
//! both minimize and maximize).
class Problem {
public:
  //! Returns the variable index.  nonneg=false adds a free variable.
  int add_variable(bool nonneg = true);
  void objective_coeff(int var, double coeff);
  //! terms: list of (variable, coefficient).
  void add_constraint(const std::vector<std::pair<int, double>>& terms, Rel rel, double rhs);

  Solution minimize(int max_iters = 200000) const { return run(false, max_iters); }
  Solution maximize(int max_iters = 200000) const { return run(true, max_iters); }

  int variables() const { return static_cast<int>(nonneg_.size()); }
  int constraints() const { return static_cast<int>(rhs_.size()); }

private:
  Solution run(bool maximize, int max_iters) const;

  std::vector<bool> nonneg_;
  std::vector<double> obj_;
  std::vector<std::vector<std::pair<int, double>>> rows_;
  std::vector<Rel> rels_;
  std::vector<double> rhs_;
};

}  // namespace qhm::lp

#endif
