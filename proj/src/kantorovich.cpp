// Copyright the qhamming developers.
// SPDX-License-Identifier: Apache-2.0
#include "qhamming/kantorovich.hpp"

#include <cmath>

#include "qhamming/errors.hpp"
#include "qhamming/simplex.hpp"

namespace qhm {
namespace {

void check_pair(int n, const RVec& mu, const RVec& nu) {
  if (mu.size() != n || nu.size() != n) throw ValidationError("measure size does not match space");
  make_probability(mu);
  make_probability(nu);
  if (std::abs(mu.sum() - nu.sum()) > 1e-9) throw ValidationError("marginal masses differ");
}

}  // namespace

KantorovichResult kantorovich(const FiniteMetricSpace& s, const RVec& mu, const RVec& nu) {
  const int n = s.size();
  check_pair(n, mu, nu);

  lp::Problem prob;
  std::vector<int> var(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      var[x * n + y] = prob.add_variable(true);
      prob.objective_coeff(var[x * n + y], s.dist(x, y));
    }
  for (int x = 0; x < n; ++x) {
    std::vector<std::pair<int, double>> row;
    for (int y = 0; y < n; ++y) row.emplace_back(var[x * n + y], 1.0);
    prob.add_constraint(row, lp::Rel::eq, mu(x));
  }
  for (int y = 0; y < n; ++y) {
    std::vector<std::pair<int, double>> col;
    for (int x = 0; x < n; ++x) col.emplace_back(var[x * n + y], 1.0);
    prob.add_constraint(col, lp::Rel::eq, nu(y));
  }

  const lp::Solution sol = prob.minimize();
  if (sol.status != lp::Status::optimal) throw ConvergenceError("transportation LP did not solve");

  KantorovichResult out;
  out.value = sol.objective;
  out.coupling = RealMatrix(n, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) out.coupling(x, y) = std::max(sol.x(var[x * n + y]), 0.0);
  // Row duals u and column duals v satisfy u(x) + v(y) <= d(x, y); on a
  // metric cost u is itself Lipschitz-1 after recentering, and
  // sum mu u + sum nu v = value with v = -u at the optimum support.
  out.potential = sol.dual.head(n);
  return out;
}

double kantorovich_dual(const FiniteMetricSpace& s, const RVec& mu, const RVec& nu) {
  const int n = s.size();
  check_pair(n, mu, nu);

  lp::Problem prob;
  std::vector<int> f(n);
  for (int x = 0; x < n; ++x) {
    f[x] = prob.add_variable(false);
    prob.objective_coeff(f[x], mu(x) - nu(x));
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      prob.add_constraint({{f[x], 1.0}, {f[y], -1.0}}, lp::Rel::le, s.dist(x, y));
    }
  const lp::Solution sol = prob.maximize();
  if (sol.status != lp::Status::optimal) throw ConvergenceError("dual transportation LP did not solve");
  return sol.objective;
}

DecompositionResult decomposition_distance(const ProductSpace& p, const RVec& mu, const RVec& nu) {
  const long n = p.points();
  check_pair(static_cast<int>(n), mu, nu);
  for (const auto& factor : p.factors)
    if (!is_complete_graph(factor))
      throw ValidationError("decomposition_distance requires unit-distance complete-graph factors");

  const int slots = p.slots();
  lp::Problem prob;
  // phi_i(x) = plus(i, x) - minus(i, x); objective (1/2) sum (plus + minus)
  // equals half the total variation once the solver has squeezed out the
  // overlap between the positive and negative parts.
  std::vector<int> plus(slots * n), minus(slots * n);
  for (int i = 0; i < slots; ++i)
    for (long x = 0; x < n; ++x) {
      plus[i * n + x] = prob.add_variable(true);
      minus[i * n + x] = prob.add_variable(true);
      prob.objective_coeff(plus[i * n + x], 0.5);
      prob.objective_coeff(minus[i * n + x], 0.5);
    }
  for (long x = 0; x < n; ++x) {
    std::vector<std::pair<int, double>> row;
    for (int i = 0; i < slots; ++i) {
      row.emplace_back(plus[i * n + x], 1.0);
      row.emplace_back(minus[i * n + x], -1.0);
    }
    prob.add_constraint(row, lp::Rel::eq, mu(x) - nu(x));
  }
  for (int i = 0; i < slots; ++i) {
    const int m = p.index.site_dim(i + 1);
    const long rest = p.index.complement_dim(i + 1);
    for (long r = 0; r < rest; ++r) {
      std::vector<std::pair<int, double>> row;
      for (int a = 0; a < m; ++a) {
        const long x = p.index.compose(i + 1, a, r);
        row.emplace_back(plus[i * n + x], 1.0);
        row.emplace_back(minus[i * n + x], -1.0);
      }
      prob.add_constraint(row, lp::Rel::eq, 0.0);
    }
  }

  const lp::Solution sol = prob.minimize();
  if (sol.status != lp::Status::optimal) throw ConvergenceError("decomposition LP did not solve");

  DecompositionResult out;
  out.value = sol.objective;
  out.components.assign(slots, RVec::Zero(n));
  for (int i = 0; i < slots; ++i)
    for (long x = 0; x < n; ++x)
      out.components[i](x) = sol.x(plus[i * n + x]) - sol.x(minus[i * n + x]);
  return out;
}

}  // namespace qhm
