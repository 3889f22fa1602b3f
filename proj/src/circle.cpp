// Copyright the qhamming developers.
// SPDX-License-Identifier: Apache-2.0
#include "qhamming/circle.hpp"

#include <algorithm>
#include <cmath>

#include "qhamming/errors.hpp"
#include "qhamming/rng.hpp"

namespace qhm {
namespace {

using C = std::complex<double>;

struct Disc {
  C c{0.0, 0.0};
  double r = -1.0;  // negative = empty disc
};

bool covers(const Disc& d, C p, double eps) { return d.r >= 0 && std::abs(p - d.c) <= d.r + eps; }

Disc disc_from_two(C a, C b) { return {0.5 * (a + b), 0.5 * std::abs(a - b)}; }

//! Circumcircle; empty disc when the points are (nearly) collinear.
Disc disc_from_three(C a, C b, C c) {
  const double ax = a.real(), ay = a.imag();
  const double bx = b.real(), by = b.imag();
  const double cx = c.real(), cy = c.imag();
  const double den = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by));
  const double scale = std::max({std::abs(a - b), std::abs(b - c), std::abs(a - c), 1e-300});
  if (std::abs(den) < 1e-14 * scale * scale) return {};
  const double a2 = ax * ax + ay * ay, b2 = bx * bx + by * by, c2 = cx * cx + cy * cy;
  const double ux = (a2 * (by - cy) + b2 * (cy - ay) + c2 * (ay - by)) / den;
  const double uy = (a2 * (cx - bx) + b2 * (ax - cx) + c2 * (bx - ax)) / den;
  const C center{ux, uy};
  return {center, std::max({std::abs(a - center), std::abs(b - center), std::abs(c - center)})};
}

//! Smallest disc with all of R on the boundary (|R| <= 3).
Disc trivial_disc(const std::vector<C>& boundary, double eps) {
  switch (boundary.size()) {
    case 0:
      return {};
    case 1:
      return {boundary[0], 0.0};
    case 2:
      return disc_from_two(boundary[0], boundary[1]);
    default: {
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
          const Disc d = disc_from_two(boundary[i], boundary[j]);
          if (covers(d, boundary[3 - i - j], eps)) return d;
        }
      return disc_from_three(boundary[0], boundary[1], boundary[2]);
    }
  }
}

Disc welzl(std::vector<C>& pts, std::size_t n, std::vector<C>& boundary, double eps) {
  if (n == 0 || boundary.size() == 3) return trivial_disc(boundary, eps);
  const C p = pts[n - 1];
  Disc d = welzl(pts, n - 1, boundary, eps);
  if (covers(d, p, eps)) return d;
  boundary.push_back(p);
  d = welzl(pts, n - 1, boundary, eps);
  boundary.pop_back();
  return d;
}

}  // namespace

Circle smallest_enclosing_circle(const std::vector<C>& pts) {
  if (pts.empty()) throw ValidationError("smallest_enclosing_circle: no points");
  double scale = 1.0;
  for (C p : pts) scale = std::max(scale, std::abs(p));
  const double eps = 1e-13 * scale;

  // Deduplicate (Welzl dislikes repeated points); keep the first original
  // index of each representative so the support refers to the input.
  std::vector<C> uniq;
  std::vector<int> rep;
  for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
    bool seen = false;
    for (C q : uniq)
      if (std::abs(pts[i] - q) <= eps) {
        seen = true;
        break;
      }
    if (!seen) {
      uniq.push_back(pts[i]);
      rep.push_back(i);
    }
  }

  Circle out;
  if (uniq.size() == 1) {
    out.center = uniq[0];
    out.radius = 0.0;
    out.support = {rep[0]};
    out.weights = {1.0};
    return out;
  }

  std::vector<C> shuffled = uniq;
  Rng rng(0x5EC5EC);  // fixed: deterministic output for identical input
  for (std::size_t i = shuffled.size(); i > 1; --i)
    std::swap(shuffled[i - 1], shuffled[rng.uniform_int(0, static_cast<int>(i) - 1)]);
  std::vector<C> boundary;
  const Disc d = welzl(shuffled, shuffled.size(), boundary, eps);
  out.center = d.c;
  out.radius = std::max(d.r, 0.0);

  // Recover a support certificate: boundary points with convex weights
  // whose weighted offsets from the center cancel.
  for (double slack = 1e-9 * std::max(1.0, out.radius); slack <= 1e-3; slack *= 100) {
    std::vector<int> bnd;
    for (std::size_t k = 0; k < uniq.size(); ++k)
      if (std::abs(std::abs(uniq[k] - out.center) - out.radius) <= slack) bnd.push_back(static_cast<int>(k));
    // Antipodal pair first.
    for (std::size_t i = 0; i < bnd.size(); ++i)
      for (std::size_t j = i + 1; j < bnd.size(); ++j)
        if (std::abs(uniq[bnd[i]] + uniq[bnd[j]] - 2.0 * out.center) <= 2 * slack) {
          out.support = {rep[bnd[i]], rep[bnd[j]]};
          out.weights = {0.5, 0.5};
          return out;
        }
    // Otherwise a triple whose triangle contains the center.
    for (std::size_t i = 0; i < bnd.size(); ++i)
      for (std::size_t j = i + 1; j < bnd.size(); ++j)
        for (std::size_t k = j + 1; k < bnd.size(); ++k) {
          const C u = uniq[bnd[i]] - out.center;
          const C v = uniq[bnd[j]] - out.center;
          const C w = uniq[bnd[k]] - out.center;
          // Solve w1 (u - w) + w2 (v - w) = -w in real coordinates.
          const double a11 = (u - w).real(), a12 = (v - w).real();
          const double a21 = (u - w).imag(), a22 = (v - w).imag();
          const double det = a11 * a22 - a12 * a21;
          if (std::abs(det) < 1e-14 * scale * scale) continue;
          const double w1 = (-w.real() * a22 + w.imag() * a12) / det;
          const double w2 = (-a11 * w.imag() + a21 * w.real()) / det;
          const double w3 = 1.0 - w1 - w2;
          if (w1 < -1e-9 || w2 < -1e-9 || w3 < -1e-9) continue;
          out.support = {rep[bnd[i]], rep[bnd[j]], rep[bnd[k]]};
          out.weights = {std::max(w1, 0.0), std::max(w2, 0.0), std::max(w3, 0.0)};
          const double total = out.weights[0] + out.weights[1] + out.weights[2];
          for (double& x : out.weights) x /= total;
          return out;
        }
  }
  throw ConvergenceError("smallest_enclosing_circle: could not certify support");
}

}  // namespace qhm
