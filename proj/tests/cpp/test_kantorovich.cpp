// Copyright the qhamming developers.
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <vector>

#include "qhamming/errors.hpp"
#include "qhamming/kantorovich.hpp"
#include "qhamming/metric.hpp"
#include "qhamming/rng.hpp"

using namespace qhm;

namespace {

//! Vertex-enumeration oracle for the transportation LP: every vertex of the
//! coupling polytope has at most m + n - 1 nonzero cells, so enumerate all
//! cell subsets of that size, solve the marginal equations, and keep the
//! cheapest nonnegative solution.  Exponential, fine for 3x3.
double transport_oracle(const FiniteMetricSpace& s, const RVec& mu, const RVec& nu) {
  const int n = s.size();
  const int cells = n * n;
  const int basis = 2 * n - 1;
  double best = 1e30;
  std::vector<int> pick(basis);
  // Enumerate subsets via a simple odometer over combinations.
  for (int i = 0; i < basis; ++i) pick[i] = i;
  while (true) {
    // Solve for the picked cells: marginals give 2n equations of rank 2n-1.
    RealMatrix a = RealMatrix::Zero(2 * n, basis);
    RVec b(2 * n);
    for (int r = 0; r < n; ++r) b(r) = mu(r);
    for (int c = 0; c < n; ++c) b(n + c) = nu(c);
    for (int k = 0; k < basis; ++k) {
      const int r = pick[k] / n, c = pick[k] % n;
      a(r, k) = 1.0;
      a(n + c, k) = 1.0;
    }
    const RVec x = a.colPivHouseholderQr().solve(b);
    if ((a * x - b).cwiseAbs().maxCoeff() < 1e-10 && x.minCoeff() > -1e-10) {
      double cost = 0.0;
      for (int k = 0; k < basis; ++k) cost += std::max(0.0, x(k)) * s.dist(pick[k] / n, pick[k] % n);
      best = std::min(best, cost);
    }
    // next combination
    int i = basis - 1;
    while (i >= 0 && pick[i] == cells - basis + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < basis; ++j) pick[j] = pick[j - 1] + 1;
  }
  return best;
}

}  // namespace

TEST_SUITE("kantorovich") {
  TEST_CASE("two points: cost is the transported mass times the distance") {
    RealMatrix d(2, 2);
    d << 0, 3, 3, 0;
    const FiniteMetricSpace s = make_metric_space({"a", "b"}, d);
    RVec mu(2), nu(2);
    mu << 0.8, 0.2;
    nu << 0.5, 0.5;
    const KantorovichResult r = kantorovich(s, mu, nu);
    CHECK(r.value == doctest::Approx(0.3 * 3.0).epsilon(1e-12));
    CHECK(kantorovich_dual(s, mu, nu) == doctest::Approx(r.value).epsilon(1e-10));
  }

  TEST_CASE("matches the vertex-enumeration oracle on random 3-point spaces") {
    Rng rng(41);
    for (int rep = 0; rep < 8; ++rep) {
      const FiniteMetricSpace s = random_metric_space(rng, 3);
      const RVec mu = random_probability(rng, 3);
      const RVec nu = random_probability(rng, 3);
      const KantorovichResult r = kantorovich(s, mu, nu);
      CHECK(r.value == doctest::Approx(transport_oracle(s, mu, nu)).epsilon(1e-9));
    }
  }

  TEST_CASE("coupling has exact marginals and pays the reported cost") {
    Rng rng(42);
    const FiniteMetricSpace s = random_metric_space(rng, 5);
    const RVec mu = random_probability(rng, 5);
    const RVec nu = random_probability(rng, 5);
    const KantorovichResult r = kantorovich(s, mu, nu);
    CHECK((r.coupling.rowwise().sum() - mu).cwiseAbs().maxCoeff() < 1e-10);
    CHECK((r.coupling.transpose().rowwise().sum() - nu).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(r.coupling.minCoeff() > -1e-12);
    double cost = 0.0;
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) cost += r.coupling(i, j) * s.dist(i, j);
    CHECK(cost == doctest::Approx(r.value).epsilon(1e-10));
  }

  TEST_CASE("potential is lipschitz-1 and attains the value") {
    Rng rng(43);
    const FiniteMetricSpace s = random_metric_space(rng, 6);
    const RVec mu = random_probability(rng, 6);
    const RVec nu = random_probability(rng, 6);
    const KantorovichResult r = kantorovich(s, mu, nu);
    for (int x = 0; x < 6; ++x)
      for (int y = 0; y < 6; ++y)
        CHECK(r.potential(x) - r.potential(y) <= s.dist(x, y) + 1e-9);
    CHECK((mu - nu).dot(r.potential) == doctest::Approx(r.value).epsilon(1e-9));
  }

  TEST_CASE("metric axioms transfer: symmetry, identity, triangle") {
    Rng rng(44);
    const FiniteMetricSpace s = random_metric_space(rng, 4);
    const RVec mu = random_probability(rng, 4);
    const RVec nu = random_probability(rng, 4);
    const RVec pi = random_probability(rng, 4);
    CHECK(kantorovich(s, mu, mu).value == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(kantorovich(s, mu, nu).value == doctest::Approx(kantorovich(s, nu, mu).value).epsilon(1e-10));
    CHECK(kantorovich(s, mu, pi).value <=
          kantorovich(s, mu, nu).value + kantorovich(s, nu, pi).value + 1e-9);
  }

  TEST_CASE("slotwise decomposition reproduces the coupling value on hamming products") {
    Rng rng(45);
    for (const std::vector<int>& dims : {std::vector<int>{2, 2}, std::vector<int>{2, 3}}) {
      const ProductSpace p = hamming_product(dims);
      const RVec mu = random_probability(rng, static_cast<int>(p.points()));
      const RVec nu = random_probability(rng, static_cast<int>(p.points()));
      const DecompositionResult dec = decomposition_distance(p, mu, nu);
      const double direct = kantorovich(p.as_metric_space(), mu, nu).value;
      CHECK(dec.value == doctest::Approx(direct).epsilon(1e-8));
      // Components sum to the difference and have vanishing slot fibers.
      RVec total = RVec::Zero(p.points());
      for (int i = 0; i < p.slots(); ++i) {
        total += dec.components[i];
        for (long rest = 0; rest < p.index.complement_dim(i + 1); ++rest) {
          double fiber = 0.0;
          for (long si = 0; si < p.index.site_dim(i + 1); ++si)
            fiber += dec.components[i](p.index.compose(i + 1, si, rest));
          CHECK(std::abs(fiber) < 1e-9);
        }
      }
      CHECK((total - (mu - nu)).cwiseAbs().maxCoeff() < 1e-9);
    }
  }

  TEST_CASE("decomposition requires unit-distance complete factors") {
    Rng rng(46);
    std::vector<FiniteMetricSpace> factors{random_metric_space(rng, 3), complete_graph(2)};
    const ProductSpace p = make_product(factors);
    const RVec mu = random_probability(rng, 6);
    const RVec nu = random_probability(rng, 6);
    CHECK_THROWS_AS(decomposition_distance(p, mu, nu), ValidationError);
  }

  TEST_CASE("mismatched measure sizes are rejected") {
    const FiniteMetricSpace s = complete_graph(3);
    RVec mu(2), nu(3);
    mu << 0.5, 0.5;
    nu << 0.2, 0.3, 0.5;
    CHECK_THROWS_AS(kantorovich(s, mu, nu), ValidationError);
  }
}
