// Copyright the qhamming developers.
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "qhamming/errors.hpp"
#include "qhamming/hamming.hpp"
#include "qhamming/rng.hpp"
#include "qhamming/tensor.hpp"

using namespace qhm;

namespace {

Matrix pauli_z() {
  Matrix z(2, 2);
  z << 1, 0, 0, -1;
  return z;
}

}  // namespace

TEST_SUITE("hamming") {
  TEST_CASE("seminorm of single-site sign observables is two") {
    const TensorFactorization f({2, 2});
    TildeOptions opt;
    opt.tol = 1e-7;
    const Matrix zi = kron(pauli_z(), Matrix::Identity(2, 2));
    const SeminormReport r = quantum_hamming_seminorm(zi, f, opt);
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-6));
    CHECK(r.lower == doctest::Approx(2.0).epsilon(1e-6));
    CHECK(r.converged);
    REQUIRE(static_cast<int>(r.sites.size()) == 2);
    CHECK(r.sites[0].cert.value == doctest::Approx(2.0).epsilon(1e-6));
    CHECK(r.sites[1].cert.value <= 1e-9);  // already identity on site 2
    // l0 is half the seminorm here: spectrum of Z (x) I is {-1, 1}.
    CHECK(r.l0 == doctest::Approx(1.0).epsilon(1e-9));
    // The same observable on the other site by symmetry.
    const Matrix iz = kron(Matrix::Identity(2, 2), pauli_z());
    CHECK(quantum_hamming_seminorm(iz, f, opt).value == doctest::Approx(2.0).epsilon(1e-6));
  }

  TEST_CASE("seminorm vanishes exactly on scalars and is scale/shift compatible") {
    Rng rng(61);
    const TensorFactorization f({2, 2});
    TildeOptions opt;
    opt.tol = 1e-7;
    CHECK(quantum_hamming_seminorm(Matrix::Identity(4, 4), f, opt).value <= 1e-10);
    const Matrix a = random_hermitian(rng, 4);
    const SeminormReport base = quantum_hamming_seminorm(a, f, opt);
    const SeminormReport shifted =
        quantum_hamming_seminorm(a + Cplx(0.7, 0.0) * Matrix::Identity(4, 4), f, opt);
    CHECK(std::abs(base.value - shifted.value) <= base.max_gap + shifted.max_gap + 1e-9);
    const SeminormReport scaled = quantum_hamming_seminorm(3.0 * a, f, opt);
    CHECK(std::abs(scaled.value - 3.0 * base.value) <= 3.0 * base.max_gap + scaled.max_gap + 1e-9);
  }

  TEST_CASE("telescoping decomposition identities hold exactly") {
    Rng rng(62);
    const TensorFactorization f({2, 2, 2});
    const Matrix rho = random_density(rng, 8);
    const Matrix sigma = random_density(rng, 8);
    const std::vector<Matrix> xs = telescope_decomposition(rho, sigma, f);
    REQUIRE(static_cast<int>(xs.size()) == 3);
    Matrix total = Matrix::Zero(8, 8);
    for (int k = 0; k < 3; ++k) {
      total += xs[k];
      CHECK(partial_trace_site(xs[k], k + 1, f).norm() < 1e-12);
      // Site-local pairings are preserved by the k-th block.
      const Matrix b = embed_site(random_hermitian(rng, 2), k + 1, f);
      CHECK(std::abs(((xs[k] - (rho - sigma)) * b).trace()) < 1e-10);
    }
    CHECK((total - (rho - sigma)).norm() < 1e-12);
    // Equal endpoints telescope to zero in total (blocks may be nonzero for
    // entangled states; only their sum is pinned).
    Matrix zero_total = Matrix::Zero(8, 8);
    for (const Matrix& x : telescope_decomposition(rho, rho, f)) zero_total += x;
    CHECK(zero_total.norm() < 1e-12);
    // For a product state every block vanishes identically.
    const Matrix prod = kron(random_density(rng, 2), kron(random_density(rng, 2), random_density(rng, 2)));
    for (const Matrix& x : telescope_decomposition(prod, prod, f)) CHECK(x.norm() < 1e-12);
  }

  TEST_CASE("two-sided comparison chain holds on random hermitian observables") {
    Rng rng(63);
    const TensorFactorization f({2, 2, 2});
    TildeOptions opt;
    opt.tol = 1e-6;
    for (int rep = 0; rep < 3; ++rep) {
      const Matrix a = random_hermitian(rng, 8);
      const ChainReport c = seminorm_chain_check(a, f, opt);
      CHECK(c.holds);
      CHECK(c.worst_violation <= c.slack_budget + 1e-12);
      // The chain quantities themselves, within the certified budget:
      CHECK(c.two_l0 <= c.sum_li + c.slack_budget);
      CHECK(c.sum_li <= c.n_lqh + c.slack_budget);
      CHECK(c.n_lqh <= c.two_n_l0 + c.slack_budget);
      CHECK(c.two_n_l0 == doctest::Approx(2.0 * 3.0 * c.seminorms.l0).epsilon(1e-12));
    }
  }

  TEST_CASE("diameter witness separates extreme product states by the site count") {
    const TensorFactorization f({2, 2});
    TildeOptions opt;
    opt.tol = 1e-6;
    const WitnessResult w = diameter_witness(f, opt);
    CHECK(w.lower_bound >= 2.0 - 1e-4);
    // The pairing is what the reported bound claims.
    const double pairing = ((w.rho_mu - w.rho_nu) * w.observable).trace().real();
    CHECK(pairing == doctest::Approx(w.lower_bound).epsilon(1e-10));
    // The unnormalized sum of sign observables has seminorm 2 = max_i l_i.
    CHECK(w.seminorm == doctest::Approx(2.0).epsilon(1e-5));
    // States are genuine densities.
    CHECK(std::abs(w.rho_mu.trace() - 1.0) < 1e-12);
    CHECK(std::abs(w.rho_nu.trace() - 1.0) < 1e-12);
    CHECK(eig_hermitian(w.rho_mu).values.minCoeff() >= -1e-12);
  }

  TEST_CASE("non-hermitian chain input is rejected") {
    Rng rng(64);
    const TensorFactorization f({2, 2});
    CHECK_THROWS_AS(seminorm_chain_check(random_matrix(rng, 4, 4), f), ValidationError);
  }
}
