// Copyright the qhamming developers.
// SPDX-License-Identifier: Apache-2.0
#ifndef QHAMMING_CIRCLE_HPP
#define QHAMMING_CIRCLE_HPP

#include <complex>
#include <vector>

namespace qhm {

//! Smallest disc enclosing a finite set of points in the complex plane,
//! together with an optimality certificate: support points on the boundary
//! and convex weights w with sum_j w_j (p_j - center) = 0.  That convex
//! combination witnesses that the radius cannot be reduced.
struct Circle {
  std::complex<double> center;
  double radius = 0.0;
  std::vector<int> support;      // indices into the input, 1..3 points
  std::vector<double> weights;   // convex weights, same length as support
};

Circle smallest_enclosing_circle(const std::vector<std::complex<double>>& pts);

}  // namespace qhm

#endif
