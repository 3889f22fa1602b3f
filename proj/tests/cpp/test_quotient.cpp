// Copyright the qhamming developers.
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <complex>

#include "qhamming/errors.hpp"
#include "qhamming/quotient.hpp"
#include "qhamming/rng.hpp"
#include "qhamming/tensor.hpp"

using namespace qhm;

namespace {

Matrix pauli_z() {
  Matrix z(2, 2);
  z << 1, 0, 0, -1;
  return z;
}

//! Every certificate must be internally sound regardless of convergence:
//! the primal point lies in the subalgebra and attains `value`, the witness
//! annihilates the subalgebra inside the unit trace-norm ball and attains
//! `lower_bound`.
void check_certificate_soundness(const DistanceCertificate& c, const Matrix& a, int site,
                                 const TensorFactorization& f) {
  CHECK(c.lower_bound <= c.value + 1e-12);
  CHECK(c.gap == doctest::Approx(c.value - c.lower_bound).epsilon(1e-12));
  CHECK(operator_norm(a - c.primal_point) == doctest::Approx(c.value).epsilon(1e-10));
  CHECK((cond_expectation(c.primal_point, site, f) - c.primal_point).norm() < 1e-9);
  CHECK(trace_norm(c.dual_witness) <= 1.0 + 1e-8);
  CHECK(cond_expectation(c.dual_witness, site, f).norm() < 1e-8);
  CHECK(((c.dual_witness * a).trace().real()) == doctest::Approx(c.lower_bound).epsilon(1e-10));
}

//! Two-level golden-section oracle for min_z ||a - z I|| over complex z
//! (convex in (Re z, Im z); partial minima of convex functions are convex).
double scalars_oracle(const Matrix& a) {
  constexpr double kG = 0.6180339887498949;
  const double reach = operator_norm(a) + 1.0;
  double py = 0.0;
  const auto obj = [&](double px) {
    return operator_norm(a - Cplx(px, py) * Matrix::Identity(a.rows(), a.cols()));
  };
  const auto golden = [&](auto&& fn) {
    double lo = -reach, hi = reach;
    double x1 = hi - kG * (hi - lo), x2 = lo + kG * (hi - lo);
    double f1 = fn(x1), f2 = fn(x2);
    for (int it = 0; it < 60; ++it) {
      if (f1 < f2) {
        hi = x2; x2 = x1; f2 = f1; x1 = hi - kG * (hi - lo); f1 = fn(x1);
      } else {
        lo = x1; x1 = x2; f1 = f2; x2 = lo + kG * (hi - lo); f2 = fn(x2);
      }
    }
    return std::min(f1, f2);
  };
  return golden([&](double px) {
    return golden([&](double qy) {
      py = qy;
      return obj(px);
    });
  });
}

}  // namespace

TEST_SUITE("quotient") {
  TEST_CASE("scalar distance: hermitian half-spread") {
    Matrix d = Matrix::Zero(3, 3);
    d(0, 0) = -1.0;
    d(1, 1) = 0.2;
    d(2, 2) = 2.0;
    const DistanceCertificate c = dist_to_scalars(d);
    CHECK(c.value == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(c.lower_bound == doctest::Approx(1.5).epsilon(1e-9));
    CHECK(l0(d) == doctest::Approx(1.5).epsilon(1e-12));
  }

  TEST_CASE("scalar distance: normal operators use the enclosing circle of the spectrum") {
    Matrix u = Matrix::Zero(3, 3);
    for (int k = 0; k < 3; ++k)
      u(k, k) = std::polar(1.0, 2.0 * M_PI * static_cast<double>(k) / 3.0);
    const DistanceCertificate c = dist_to_scalars(u);
    CHECK(c.value == doctest::Approx(1.0).epsilon(1e-10));  // circumradius of the triangle
    CHECK(c.converged);
  }

  TEST_CASE("scalar distance: nilpotent jordan block keeps its full norm") {
    Matrix n = Matrix::Zero(2, 2);
    n(0, 1) = 1.0;
    // ||n - z||^2 = |z|^2 + 1/2 + sqrt(1/4 + |z|^2) is minimized at z = 0.
    const DistanceCertificate c = dist_to_scalars(n, 1e-7);
    CHECK(c.value == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(c.lower_bound == doctest::Approx(1.0).epsilon(1e-5));
  }

  TEST_CASE("scalar distance: general operators match a golden-section oracle") {
    Rng rng(51);
    for (int rep = 0; rep < 3; ++rep) {
      const Matrix a = random_matrix(rng, 3, 3);  // almost surely non-normal
      const DistanceCertificate c = dist_to_scalars(a, 1e-7);
      CHECK(std::abs(c.value - scalars_oracle(a)) < 1e-5);
      CHECK(c.lower_bound <= c.value + 1e-12);
      CHECK(c.gap <= 1e-6);
    }
  }

  TEST_CASE("site distance pins the sign observable") {
    const TensorFactorization f({2, 2});
    const Matrix zi = kron(pauli_z(), Matrix::Identity(2, 2));
    TildeOptions opt;
    opt.tol = 1e-8;
    const DistanceCertificate c1 = dist_to_tilde(zi, 1, f, opt);
    CHECK(c1.value == doctest::Approx(1.0).epsilon(1e-7));
    CHECK(c1.lower_bound == doctest::Approx(1.0).epsilon(1e-7));
    CHECK(c1.converged);
    check_certificate_soundness(c1, zi, 1, f);
    // The optimal witness is (Z (x) I) / 4: trace norm one, annihilates the
    // subalgebra, and pairs to exactly 1.
    const Matrix star = 0.25 * zi;
    CHECK(trace_norm(star) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK((star * zi).trace().real() == doctest::Approx(1.0).epsilon(1e-12));
    // The observable already acts as the identity on site 2.
    CHECK(dist_to_tilde(zi, 2, f, opt).value <= 1e-10);
    // And l_i doubles the distance.
    CHECK(l_i(zi, 1, f, opt).value == doctest::Approx(2.0).epsilon(1e-7));
  }

  TEST_CASE("random hermitian certificates close their gap and are sound") {
    Rng rng(52);
    const TensorFactorization f({2, 2});
    TildeOptions opt;
    opt.tol = 1e-7;
    for (int rep = 0; rep < 6; ++rep) {
      const Matrix a = random_hermitian(rng, 4);
      const int site = 1 + (rep % 2);
      const DistanceCertificate c = dist_to_tilde(a, site, f, opt);
      CHECK(c.gap <= opt.tol * 1.0001);
      CHECK(c.converged);
      check_certificate_soundness(c, a, site, f);
      // Conditional expectation is within a factor two of optimal.
      const double r0 = operator_norm(a - cond_expectation(a, site, f));
      CHECK(c.value <= r0 + 1e-12);
      CHECK(r0 <= 2.0 * c.value + 1e-6);
    }
  }

  TEST_CASE("site distance is invariant under subalgebra shifts and scales linearly") {
    Rng rng(53);
    const TensorFactorization f({2, 2});
    TildeOptions opt;
    opt.tol = 1e-8;
    const Matrix a = random_hermitian(rng, 4);
    const Matrix shift = embed_complement(random_hermitian(rng, 2), 1, f);
    const DistanceCertificate base = dist_to_tilde(a, 1, f, opt);
    const DistanceCertificate shifted = dist_to_tilde(a + shift, 1, f, opt);
    CHECK(std::abs(base.value - shifted.value) <= base.gap + shifted.gap + 1e-9);
    const DistanceCertificate doubled = dist_to_tilde(2.0 * a, 1, f, opt);
    CHECK(std::abs(doubled.value - 2.0 * base.value) <= 2.0 * base.gap + doubled.gap + 1e-9);
  }

  TEST_CASE("non-hermitian inputs get sound certificates through the dilation") {
    Rng rng(54);
    const TensorFactorization f({2, 2});
    TildeOptions opt;
    opt.tol = 1e-5;
    for (int rep = 0; rep < 2; ++rep) {
      const Matrix a = random_matrix(rng, 4, 4);
      const DistanceCertificate c = dist_to_tilde(a, 1 + rep, f, opt);
      check_certificate_soundness(c, a, 1 + rep, f);
      CHECK(c.gap <= 1e-4);  // loose: the general path is not acceptance-gated
    }
  }

  TEST_CASE("invalid sites and shapes are rejected") {
    const TensorFactorization f({2, 2});
    Rng rng(55);
    const Matrix a = random_hermitian(rng, 4);
    CHECK_THROWS_AS(dist_to_tilde(a, 0, f), ValidationError);
    CHECK_THROWS_AS(dist_to_tilde(a, 3, f), ValidationError);
    CHECK_THROWS_AS(dist_to_tilde(random_hermitian(rng, 3), 1, f), ValidationError);
    CHECK_THROWS_AS(dist_to_scalars(random_matrix(rng, 2, 3)), ValidationError);
  }
}
