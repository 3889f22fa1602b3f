// Copyright the qhamming developers.
// SPDX-License-Identifier: Apache-2.0
#include "qhamming/metric.hpp"

#include <algorithm>
#include <cmath>

#include "qhamming/circle.hpp"
#include "qhamming/errors.hpp"

namespace qhm {

FiniteMetricSpace make_metric_space(std::vector<std::string> labels, RealMatrix dist) {
  const int n = static_cast<int>(labels.size());
  if (n < 1) throw ValidationError("metric space needs at least one point");
  if (dist.rows() != n || dist.cols() != n) throw ValidationError("distance matrix shape mismatch");
  if (!dist.allFinite()) throw ValidationError("distance matrix has non-finite entries");
  for (int i = 0; i < n; ++i) {
    if (std::abs(dist(i, i)) > 1e-12) throw ValidationError("distance matrix diagonal must be zero");
    dist(i, i) = 0.0;
    for (int j = i + 1; j < n; ++j) {
      if (std::abs(dist(i, j) - dist(j, i)) > 1e-12) throw ValidationError("distance matrix must be symmetric");
      const double d = 0.5 * (dist(i, j) + dist(j, i));
      if (d <= 0) throw ValidationError("distinct points must have positive distance");
      dist(i, j) = dist(j, i) = d;
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (dist(i, j) > dist(i, k) + dist(k, j) + 1e-12)
          throw ValidationError("triangle inequality violated");
  return FiniteMetricSpace{std::move(labels), std::move(dist)};
}

FiniteMetricSpace complete_graph(int n) {
  if (n < 1) throw ValidationError("complete_graph needs n >= 1");
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = std::to_string(i);
  RealMatrix d = RealMatrix::Ones(n, n) - RealMatrix::Identity(n, n);
  return FiniteMetricSpace{std::move(labels), std::move(d)};
}

bool is_complete_graph(const FiniteMetricSpace& s, double tol) {
  for (int i = 0; i < s.size(); ++i)
    for (int j = 0; j < s.size(); ++j)
      if (i != j && std::abs(s.dist(i, j) - 1.0) > tol) return false;
  return true;
}

std::pair<double, double> space_radius_diameter(const FiniteMetricSpace& s) {
  const double diam = s.size() > 1 ? s.dist.maxCoeff() : 0.0;
  return {0.5 * diam, diam};
}

double ProductSpace::metric(long x, long y) const {
  double d = 0.0;
  long rx = x, ry = y;
  for (int s = slots(); s >= 1; --s) {
    const int m = factors[s - 1].size();
    d += factors[s - 1].dist(static_cast<int>(rx % m), static_cast<int>(ry % m));
    rx /= m;
    ry /= m;
  }
  return d;
}

std::string ProductSpace::point_label(long x) const {
  std::vector<int> digit(slots());
  long rem = x;
  for (int s = slots(); s >= 1; --s) {
    digit[s - 1] = static_cast<int>(rem % factors[s - 1].size());
    rem /= factors[s - 1].size();
  }
  std::string out = "(";
  for (int s = 0; s < slots(); ++s) {
    if (s) out += ",";
    out += factors[s].labels[digit[s]];
  }
  return out + ")";
}

FiniteMetricSpace ProductSpace::as_metric_space() const {
  const long n = points();
  if (n > 4096) throw ValidationError("product space too large to materialize");
  std::vector<std::string> labels(n);
  RealMatrix d(n, n);
  for (long x = 0; x < n; ++x) {
    labels[x] = point_label(x);
    for (long y = 0; y < n; ++y) d(x, y) = metric(x, y);
  }
  return FiniteMetricSpace{std::move(labels), std::move(d)};
}

ProductSpace make_product(std::vector<FiniteMetricSpace> factors) {
  if (factors.empty()) throw ValidationError("product space needs at least one factor");
  std::vector<int> sizes;
  sizes.reserve(factors.size());
  for (const auto& f : factors) sizes.push_back(f.size());
  return ProductSpace{std::move(factors), TensorFactorization(sizes)};
}

ProductSpace hamming_product(const std::vector<int>& alphabet_sizes) {
  std::vector<FiniteMetricSpace> fs;
  fs.reserve(alphabet_sizes.size());
  for (int m : alphabet_sizes) fs.push_back(complete_graph(m));
  return make_product(std::move(fs));
}

// ------------------------------------------------------------- seminorms ---

double lipschitz(const CVec& f, const FiniteMetricSpace& s) {
  if (f.size() != s.size()) throw ValidationError("lipschitz: function size mismatch");
  double best = 0.0;
  for (int x = 0; x < s.size(); ++x)
    for (int y = x + 1; y < s.size(); ++y)
      best = std::max(best, std::abs(f(x) - f(y)) / s.dist(x, y));
  return best;
}

double lipschitz(const CVec& f, const ProductSpace& p) {
  if (f.size() != p.points()) throw ValidationError("lipschitz: function size mismatch");
  double best = 0.0;
  for (long x = 0; x < p.points(); ++x)
    for (long y = x + 1; y < p.points(); ++y)
      best = std::max(best, std::abs(f(x) - f(y)) / p.metric(x, y));
  return best;
}

double partial_lipschitz(const CVec& f, const ProductSpace& p, int slot) {
  if (f.size() != p.points()) throw ValidationError("partial_lipschitz: function size mismatch");
  const int m = p.index.site_dim(slot);
  const long rest = p.index.complement_dim(slot);
  const auto& d = p.factors[slot - 1].dist;
  double best = 0.0;
  for (long r = 0; r < rest; ++r)
    for (int a = 0; a < m; ++a) {
      const long xa = p.index.compose(slot, a, r);
      for (int b = a + 1; b < m; ++b)
        best = std::max(best, std::abs(f(xa) - f(p.index.compose(slot, b, r))) / d(a, b));
    }
  return best;
}

std::vector<double> partial_lipschitz_all(const CVec& f, const ProductSpace& p) {
  std::vector<double> out(p.slots());
  for (int s = 1; s <= p.slots(); ++s) out[s - 1] = partial_lipschitz(f, p, s);
  return out;
}

double dist_to_constants(const CVec& f) {
  std::vector<Cplx> pts(f.data(), f.data() + f.size());
  return smallest_enclosing_circle(pts).radius;
}

// -------------------------------------------------------------- measures ---

RVec make_probability(RVec w) {
  if (w.size() < 1) throw ValidationError("probability vector is empty");
  if (!w.allFinite()) throw ValidationError("probability vector has non-finite entries");
  if (w.minCoeff() < -1e-12) throw ValidationError("probability vector has negative weights");
  if (std::abs(w.sum() - 1.0) > 1e-12) throw ValidationError("probability weights must sum to 1");
  return w;
}

FiniteMetricSpace random_metric_space(Rng& rng, int n) {
  RealMatrix d = RealMatrix::Zero(n, n);
  // Edge weights are snapped to the 1e-3 decimal grid.  The closure below
  // leaves many exactly tight triangles d(i,j) = d(i,k) + d(k,j); on the grid
  // those sums are short decimals, so they survive the 12-significant-digit
  // instance serialization and the parsed space still passes the 1e-12
  // triangle-inequality validation.  Continuous weights do not: rounding a
  // tight triple can violate the inequality by ~2e-12.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      d(i, j) = d(j, i) = std::round(1000.0 * rng.uniform(0.2, 2.0)) / 1000.0;
  // Floyd-Warshall closure: enforces the triangle inequality exactly while
  // keeping positivity (weights are bounded away from zero).
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d(i, j) = std::min(d(i, j), d(i, k) + d(k, j));
  for (int i = 0; i < n; ++i) d(i, i) = 0.0;
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return make_metric_space(std::move(labels), std::move(d));
}

RVec random_probability(Rng& rng, int n) {
  RVec w(n);
  for (int i = 0; i < n; ++i) w(i) = -std::log(1.0 - rng.uniform());
  w /= w.sum();
  // Snap to integer multiples of 1e-9 and repair the total on the largest
  // weight.  Grid weights have at most nine significant digits, so they pass
  // through the 12-significant-digit instance serialization unchanged and the
  // parsed vector still sums to 1 within the 1e-12 validation slack; a merely
  // renormalized continuous vector can drift past it when every entry rounds.
  std::vector<long long> grid(n);
  long long total = 0;
  for (int i = 0; i < n; ++i) {
    grid[i] = std::llround(w(i) * 1e9);
    total += grid[i];
  }
  int big = 0;
  for (int i = 1; i < n; ++i)
    if (grid[i] > grid[big]) big = i;
  grid[big] += 1000000000LL - total;
  for (int i = 0; i < n; ++i) w(i) = static_cast<double>(grid[i]) * 1e-9;
  return make_probability(w);
}

}  // namespace qhm
