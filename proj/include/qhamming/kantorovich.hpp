// Copyright the qhamming developers.
// SPDX-License-Identifier: Apache-2.0
#ifndef QHAMMING_KANTOROVICH_HPP
#define QHAMMING_KANTOROVICH_HPP

#include <vector>

#include "qhamming/metric.hpp"

namespace qhm {

struct KantorovichResult {
  double value = 0.0;
  RealMatrix coupling;  // optimal transport plan, row marginal mu, column nu
  RVec potential;       // dual potential f with f(x) - f(y) <= d(x, y)
};

//! Least transport cost between two probability vectors on a finite metric
//! space, solved as the transportation LP.  The dual potential comes from
//! the LP multipliers and satisfies sum (mu - nu) potential = value.
KantorovichResult kantorovich(const FiniteMetricSpace& s, const RVec& mu, const RVec& nu);

//! Same value through the dual LP over Lipschitz-1 potentials
//!   max sum (mu - nu) f   s.t.  f(x) - f(y) <= d(x, y).
//! Kept as an independent route for cross-checks.
double kantorovich_dual(const FiniteMetricSpace& s, const RVec& mu, const RVec& nu);

struct DecompositionResult {
  double value = 0.0;
  std::vector<RVec> components;  // one signed measure per slot
};

//! Transport distance on a product of complete graphs computed without
//! couplings: split mu - nu into slot-local signed measures phi_i whose
//! slot-i fiber sums vanish, and pay half the total variation of each.
//!   min (1/2) sum_i ||phi_i||_1
//!   s.t. sum_i phi_i = mu - nu,  phi_i fiber sums over slot i all zero.
//! Requires every factor to be a unit-distance complete graph.
DecompositionResult decomposition_distance(const ProductSpace& p, const RVec& mu, const RVec& nu);

}  // namespace qhm

#endif
