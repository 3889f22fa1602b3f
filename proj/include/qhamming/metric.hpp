// Copyright the qhamming developers.
// SPDX-License-Identifier: Apache-2.0
#ifndef QHAMMING_METRIC_HPP
#define QHAMMING_METRIC_HPP

#include <string>
#include <vector>

#include "qhamming/tensor.hpp"

namespace qhm {

//! Finite metric space given by labels and a distance matrix.  Validated on
//! construction: zero diagonal, symmetry, strictly positive off-diagonal
//! entries, triangle inequality (all within 1e-12).
struct FiniteMetricSpace {
  std::vector<std::string> labels;
  RealMatrix dist;

  int size() const { return static_cast<int>(labels.size()); }
};

FiniteMetricSpace make_metric_space(std::vector<std::string> labels, RealMatrix dist);
//! n points, every pair at distance 1.
FiniteMetricSpace complete_graph(int n);

bool is_complete_graph(const FiniteMetricSpace& s, double tol = 1e-12);

//! (diameter / 2, diameter) — the radius convention used throughout is half
//! the diameter.
std::pair<double, double> space_radius_diameter(const FiniteMetricSpace& s);

//! Product of finite metric spaces carrying the sum metric
//! d(x, y) = sum_i d_i(x_i, y_i).  Points are ordered lexicographically
//! with slot 1 most significant, matching TensorFactorization.
struct ProductSpace {
  std::vector<FiniteMetricSpace> factors;
  TensorFactorization index;  // site_dims = factor sizes

  int slots() const { return static_cast<int>(factors.size()); }
  long points() const { return index.total_dim(); }
  double metric(long x, long y) const;
  std::string point_label(long x) const;
  //! Materialize the sum metric as a flat space (labels are tuples).
  FiniteMetricSpace as_metric_space() const;
};

ProductSpace make_product(std::vector<FiniteMetricSpace> factors);
//! Product of complete graphs: the Hamming metric when all alphabets are
//! used with unit factor distances.
ProductSpace hamming_product(const std::vector<int>& alphabet_sizes);

// ------------------------------------------------------------- seminorms ---

//! Best Lipschitz constant max_{x != y} |f(x) - f(y)| / d(x, y).
double lipschitz(const CVec& f, const FiniteMetricSpace& s);
double lipschitz(const CVec& f, const ProductSpace& p);
//! Slot-i Lipschitz constant: pairs varying only in slot i.
double partial_lipschitz(const CVec& f, const ProductSpace& p, int slot);
std::vector<double> partial_lipschitz_all(const CVec& f, const ProductSpace& p);

//! Half the spectral spread in sup norm: distance from f to the constants,
//! i.e. the radius of the smallest disc enclosing the values of f.
double dist_to_constants(const CVec& f);

// -------------------------------------------------------------- measures ---

//! Validate a probability vector: entries >= -1e-12, sum within 1e-12 of 1.
RVec make_probability(RVec w);

//! Random metric space: shortest-path closure of a random symmetric matrix
//! with entries in [0.2, 2]; satisfies all metric axioms exactly.
FiniteMetricSpace random_metric_space(Rng& rng, int n);
RVec random_probability(Rng& rng, int n);

}  // namespace qhm

#endif
