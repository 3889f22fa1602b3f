// Copyright the qhamming developers.
// SPDX-License-Identifier: Apache-2.0
#ifndef QHAMMING_QUOTIENT_HPP
#define QHAMMING_QUOTIENT_HPP

#include "qhamming/tensor.hpp"

namespace qhm {

//! Two-sided certificate for a quotient distance dist(a, V) in operator
//! norm.  `value` is achieved by the feasible point `primal_point` of V, so
//! it is a true upper bound; `dual_witness` is a trace-norm <= 1 functional
//! annihilating V, so `lower_bound = Re tr(dual_witness a)` is a true lower
//! bound no matter how well the solver converged.  `gap = value -
//! lower_bound` brackets the error.
struct DistanceCertificate {
  double value = 0.0;
  Matrix primal_point;
  Matrix dual_witness;
  double lower_bound = 0.0;
  double gap = 0.0;
  bool converged = false;
  int iterations = 0;
};

//! Distance from a to the scalar multiples of the identity.
//!  - Hermitian a: closed form, half the spectral spread.
//!  - normal a: radius of the smallest disc enclosing the spectrum.
//!  - general a: 2-D convex minimization of ||a - z|| over z.
DistanceCertificate dist_to_scalars(const Matrix& a, double tol = 1e-6);

struct TildeOptions {
  double tol = 1e-6;
  int max_bisect = 200;      // outer bisection levels
  int max_proj_iters = 2000; // alternating-projection sweeps per level
  int polish_iters = 250;    // dual ascent budget for the lower bound
};

//! Distance from a to the subalgebra of operators acting as the identity
//! on `site` (certified from both sides).  The conditional expectation onto
//! that subalgebra starts the search (it is within a factor 2 of optimal);
//! the exact level sets are explored by bisection over t of the feasibility
//! problem ||a - c|| <= t, solved by alternating projections between the
//! affine set {a - c} and the operator-norm ball (with a block dilation when
//! a is not Hermitian); the dual witness is extracted from the projection
//! gap vector and polished by projected supergradient ascent.
DistanceCertificate dist_to_tilde(const Matrix& a, int site, const TensorFactorization& f,
                                  const TildeOptions& opt = {});

//! Seminorm against the scalars: l0(a) = dist(a, C I).
double l0(const Matrix& a, double tol = 1e-6);

//! Site seminorm l_i(a) = 2 dist(a, tilde-A_i); full certificate scaled by 2.
DistanceCertificate l_i(const Matrix& a, int site, const TensorFactorization& f,
                        const TildeOptions& opt = {});

}  // namespace qhm

#endif
