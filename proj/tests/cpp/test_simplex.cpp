// Copyright the qhamming developers.
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "qhamming/rng.hpp"
#include "qhamming/simplex.hpp"

using namespace qhm;
using namespace qhm::lp;

TEST_SUITE("simplex") {
  TEST_CASE("standard form: textbook two-variable program") {
    // min -x - 2y  s.t.  x + y + s1 = 4,  y + s2 = 3,  all >= 0.
    RealMatrix a(2, 4);
    a << 1, 1, 1, 0, 0, 1, 0, 1;
    RVec b(2), c(4);
    b << 4, 3;
    c << -1, -2, 0, 0;
    const Solution s = solve_standard(a, b, c);
    REQUIRE(s.status == Status::optimal);
    CHECK(s.objective == doctest::Approx(-7.0).epsilon(1e-12));  // x=1, y=3
    CHECK(s.x(0) == doctest::Approx(1.0));
    CHECK(s.x(1) == doctest::Approx(3.0));
    CHECK(b.dot(s.dual) == doctest::Approx(s.objective).epsilon(1e-12));
  }

  TEST_CASE("modelling layer: maximize with inequalities and a free variable") {
    Problem p;
    const int x = p.add_variable();
    const int y = p.add_variable();
    const int z = p.add_variable(false);  // free
    p.objective_coeff(x, 1.0);
    p.objective_coeff(y, 1.0);
    p.objective_coeff(z, 0.5);
    p.add_constraint({{x, 1.0}, {y, 1.0}}, Rel::le, 1.0);
    p.add_constraint({{z, 1.0}}, Rel::le, 2.0);
    p.add_constraint({{z, 1.0}}, Rel::ge, -2.0);
    const Solution s = p.maximize();
    REQUIRE(s.status == Status::optimal);
    CHECK(s.objective == doctest::Approx(2.0).epsilon(1e-12));  // x+y=1, z=2
    CHECK(s.x(x) + s.x(y) == doctest::Approx(1.0));
    CHECK(s.x(z) == doctest::Approx(2.0));
  }

  TEST_CASE("free variables can go negative") {
    Problem p;
    const int z = p.add_variable(false);
    p.objective_coeff(z, 1.0);
    p.add_constraint({{z, 1.0}}, Rel::ge, -5.0);
    const Solution s = p.minimize();
    REQUIRE(s.status == Status::optimal);
    CHECK(s.x(z) == doctest::Approx(-5.0));
  }

  TEST_CASE("infeasible and unbounded programs are classified") {
    Problem bad;
    const int x = bad.add_variable();
    bad.add_constraint({{x, 1.0}}, Rel::le, -1.0);  // x >= 0 and x <= -1
    CHECK(bad.minimize().status == Status::infeasible);

    Problem unb;
    const int y = unb.add_variable();
    unb.objective_coeff(y, 1.0);
    CHECK(unb.maximize().status == Status::unbounded);
  }

  TEST_CASE("assignment polytopes match brute force over permutations") {
    Rng rng(31);
    for (int rep = 0; rep < 6; ++rep) {
      RealMatrix cost(3, 3);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) cost(i, j) = rng.uniform(0.0, 1.0);
      Problem p;
      std::vector<std::vector<int>> var(3, std::vector<int>(3));
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          var[i][j] = p.add_variable();
          p.objective_coeff(var[i][j], cost(i, j));
        }
      for (int i = 0; i < 3; ++i) {
        std::vector<std::pair<int, double>> row, col;
        for (int j = 0; j < 3; ++j) {
          row.push_back({var[i][j], 1.0});
          col.push_back({var[j][i], 1.0});
        }
        p.add_constraint(row, Rel::eq, 1.0);
        p.add_constraint(col, Rel::eq, 1.0);
      }
      const Solution s = p.minimize();
      REQUIRE(s.status == Status::optimal);
      std::vector<int> perm{0, 1, 2};
      double best = 1e30;
      do {
        best = std::min(best, cost(0, perm[0]) + cost(1, perm[1]) + cost(2, perm[2]));
      } while (std::next_permutation(perm.begin(), perm.end()));
      CHECK(s.objective == doctest::Approx(best).epsilon(1e-10));
    }
  }

  TEST_CASE("degenerate ties terminate and primal-dual objectives coincide") {
    // Every vertex of this transportation instance is degenerate (equal
    // supplies and demands); Bland's rule must still terminate.
    Problem p;
    std::vector<std::vector<int>> var(2, std::vector<int>(2));
    RealMatrix cost(2, 2);
    cost << 1, 1, 1, 1;  // fully tied costs
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        var[i][j] = p.add_variable();
        p.objective_coeff(var[i][j], cost(i, j));
      }
    for (int i = 0; i < 2; ++i) {
      p.add_constraint({{var[i][0], 1.0}, {var[i][1], 1.0}}, Rel::eq, 0.5);
      p.add_constraint({{var[0][i], 1.0}, {var[1][i], 1.0}}, Rel::eq, 0.5);
    }
    const Solution s = p.minimize();
    REQUIRE(s.status == Status::optimal);
    CHECK(s.objective == doctest::Approx(1.0).epsilon(1e-12));
  }

  TEST_CASE("random feasible programs return feasible primals with matching duals") {
    Rng rng(32);
    for (int rep = 0; rep < 8; ++rep) {
      const int n = 5, m = 3;
      RealMatrix a(m, n);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = rng.uniform(-1.0, 1.0);
      RVec x0(n), c(n);
      for (int j = 0; j < n; ++j) {
        x0(j) = rng.uniform(0.1, 1.0);  // strictly feasible primal certificate
        c(j) = rng.uniform(-1.0, 1.0);
      }
      const RVec b = a * x0;
      const Solution s = solve_standard(a, b, c);
      if (s.status == Status::unbounded) continue;  // legitimately possible
      REQUIRE(s.status == Status::optimal);
      CHECK((a * s.x - b).cwiseAbs().maxCoeff() < 1e-9);
      CHECK(s.x.minCoeff() > -1e-9);
      CHECK(s.objective <= c.dot(x0) + 1e-9);                       // beats the known point
      CHECK(b.dot(s.dual) == doctest::Approx(s.objective).epsilon(1e-9));  // strong duality
      // Dual feasibility: reduced costs stay nonnegative.
      const RVec reduced = c - a.transpose() * s.dual;
      CHECK(reduced.minCoeff() > -1e-8);
    }
  }
}
