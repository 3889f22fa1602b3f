// Copyright the qhamming developers.
// SPDX-License-Identifier: Apache-2.0
#include "qhamming/wasserstein.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qhamming/errors.hpp"
#include "qhamming/hamming.hpp"

namespace qhm {
namespace {

//! Apply (n Id - sum_i E_i)^{-1} to a traceless operator.  The commuting
//! projections E_i split the space by identity-support pattern S (the set
//! of sites on which a component acts as identity); on pattern S the
//! operator acts as (n - |S|).  Moebius inversion over subsets turns the
//! patternwise inverse into a combination of the E_T themselves.
Matrix solve_centered(const Matrix& r0, const TensorFactorization& f) {
  const int n = f.sites();
  const long d = f.total_dim();
  Matrix r = r0 - (r0.trace() / static_cast<double>(d)) * Matrix::Identity(d, d);

  const auto choose = [](int a, int b) {
    double c = 1.0;
    for (int k = 0; k < b; ++k) c = c * (a - k) / (k + 1);
    return c;
  };
  // Weight for E_T with |T| = t: sum over sub-patterns S of T (S != full
  // site set) of (-1)^{t-|S|} / (n - |S|).
  std::vector<double> weight(n + 1, 0.0);
  for (int t = 0; t <= n; ++t) {
    const int s_max = (t == n) ? n - 1 : t;
    for (int s = 0; s <= s_max; ++s)
      weight[t] += choose(t, s) * (((t - s) % 2) ? -1.0 : 1.0) / static_cast<double>(n - s);
  }

  // E_T(r) for all subsets by dynamic programming on the bitmask.
  const unsigned total = 1u << n;
  std::vector<Matrix> et(total);
  et[0] = r;
  for (unsigned mask = 1; mask < total; ++mask) {
    const unsigned low = mask & (~mask + 1);  // lowest set bit
    int site = 1;
    for (unsigned b = low; b > 1; b >>= 1) ++site;
    et[mask] = cond_expectation(et[mask ^ low], site, f);
  }
  Matrix out = Matrix::Zero(d, d);
  for (unsigned mask = 0; mask < total; ++mask)
    out += weight[__builtin_popcount(mask)] * et[mask];
  return out;
}

//! Eigenvalue soft threshold: proximal map of gamma * (1/2)||.||_tr.
Matrix soft_threshold(const Matrix& z, double gamma_half) {
  const Eig e = eig_hermitian(z);
  RVec lam = e.values;
  for (long i = 0; i < lam.size(); ++i) {
    const double mag = std::abs(lam(i)) - gamma_half;
    lam(i) = mag <= 0 ? 0.0 : (lam(i) > 0 ? mag : -mag);
  }
  return e.vectors * lam.asDiagonal() * e.vectors.adjoint();
}

double half_tracenorm_sum(const std::vector<Matrix>& xs) {
  double v = 0.0;
  for (const auto& x : xs) v += trace_norm(x);
  return 0.5 * v;
}

Matrix checked_delta(const Matrix& rho, const Matrix& sigma, const TensorFactorization& f) {
  require_square(rho, "w1");
  require_square(sigma, "w1");
  require_finite(rho, "w1");
  require_finite(sigma, "w1");
  if (rho.rows() != f.total_dim() || sigma.rows() != f.total_dim())
    throw ValidationError("w1: state does not match factorization");
  const double scale = 1.0 + rho.cwiseAbs().maxCoeff() + sigma.cwiseAbs().maxCoeff();
  if (!is_hermitian(rho, 1e-9 * scale) || !is_hermitian(sigma, 1e-9 * scale))
    throw ValidationError("w1: states must be Hermitian");
  if (std::abs((rho - sigma).trace()) > 1e-9) throw ValidationError("w1: states must have equal trace");
  const long d = f.total_dim();
  Matrix delta = hermitize(rho - sigma);
  delta -= (delta.trace() / static_cast<double>(d)) * Matrix::Identity(d, d);
  return delta;
}

}  // namespace

std::vector<Matrix> project_feasible_decomposition(const std::vector<Matrix>& y,
                                                   const Matrix& delta,
                                                   const TensorFactorization& f) {
  const int n = f.sites();
  if (static_cast<int>(y.size()) != n)
    throw ValidationError("project_feasible_decomposition: block count mismatch");
  Matrix r = -delta;
  for (int i = 0; i < n; ++i) r += y[i] - cond_expectation(y[i], i + 1, f);
  const Matrix lambda = solve_centered(r, f);
  std::vector<Matrix> x(n);
  for (int i = 0; i < n; ++i) {
    const Matrix block = y[i] - lambda;
    x[i] = block - cond_expectation(block, i + 1, f);
  }
  return x;
}

W1Result w1_primal(const Matrix& rho, const Matrix& sigma, const TensorFactorization& f,
                   const W1Options& opt) {
  const Matrix delta = checked_delta(rho, sigma, f);
  const int n = f.sites();
  const long d = f.total_dim();

  W1Result out;
  out.dual_observable = Matrix::Zero(d, d);
  if (delta.norm() <= 1e-13) {
    out.decomposition.assign(n, Matrix::Zero(d, d));
    out.converged = true;
    return out;
  }

  // The interpolating decomposition is feasible and within a factor of the
  // optimum, so it both seeds the splitting and caps the objective.
  std::vector<Matrix> best = telescope_decomposition(hermitize(rho), hermitize(sigma), f);
  double best_obj = half_tracenorm_sum(best);
  std::vector<Matrix> z = best, x(n), yv(n);

  const double gamma = opt.penalty;
  const double res_target = 0.05 * opt.tol * (1.0 + delta.norm());
  double last_obj = best_obj;
  int it = 0;
  for (; it < opt.max_iter; ++it) {
    for (int i = 0; i < n; ++i) x[i] = soft_threshold(z[i], 0.5 * gamma);
    std::vector<Matrix> mid(n);
    for (int i = 0; i < n; ++i) mid[i] = 2.0 * x[i] - z[i];
    yv = project_feasible_decomposition(mid, delta, f);
    double res = 0.0;
    for (int i = 0; i < n; ++i) {
      z[i] += yv[i] - x[i];
      res += (yv[i] - x[i]).squaredNorm();
    }
    res = std::sqrt(res);
    if (it % 5 == 4 || res <= res_target) {
      const double obj = half_tracenorm_sum(yv);
      if (obj < best_obj) {
        best_obj = obj;
        best = yv;
      }
      if (res <= res_target && std::abs(last_obj - obj) <= 0.05 * opt.tol * (1.0 + obj)) break;
      last_obj = obj;
    }
  }

  out.primal_value = best_obj;
  out.decomposition = best;
  out.iterations = it;

  // Multiplier estimate: U_i = (Z_i - X_i) / gamma sits in the trace-norm
  // subdifferential at the solution and has the form a - I_i (x) b_i; the
  // least-squares a solves the same centered system as the projection.
  Matrix rhs = Matrix::Zero(d, d);
  for (int i = 0; i < n; ++i) {
    const Matrix u = (z[i] - x[i]) / gamma;
    rhs += u - cond_expectation(u, i + 1, f);
  }
  out.dual_observable = hermitize(solve_centered(rhs, f));
  out.dual_value = (delta * out.dual_observable).trace().real();  // uncertified here
  out.value = out.primal_value;
  out.gap = out.primal_value - out.dual_value;
  out.converged = false;  // certification happens in w1()
  return out;
}

double w1_dual_ascent(const Matrix& delta, const TensorFactorization& f, Matrix& a,
                      const W1Options& opt) {
  const int n = f.sites();
  const long d = f.total_dim();
  if (a.rows() != d) a = Matrix::Zero(d, d);
  a = hermitize(a);

  TildeOptions inner = opt.site;
  inner.tol = std::min(inner.tol, std::max(0.02 * opt.tol, 1e-8));

  double best = -std::numeric_limits<double>::infinity();
  Matrix a_best = Matrix::Zero(d, d);
  const double step0 = 0.5 / std::max(1e-12, delta.norm());
  Matrix cur = a;
  for (int round = 1; round <= opt.dual_rounds; ++round) {
    if (round > 1) cur += (step0 / std::sqrt(static_cast<double>(round - 1))) * delta;
    // Radial repair: certified per-site distances, then shrink toward the
    // nearest subalgebra elements until every certified distance is <= 1/2.
    Matrix cand = cur;
    double scale = 1.0;
    for (int pass = 0; pass < 2; ++pass) {
      bool ok = true;
      for (int i = 1; i <= n; ++i) {
        const DistanceCertificate cert = dist_to_tilde(cand, i, f, inner);
        if (cert.value > 0.5) {
          ok = false;
          if (pass == 0) {
            cand = cert.primal_point + (cand - cert.primal_point) * (0.5 / cert.value);
          } else {
            scale = std::max(scale, 2.0 * cert.value);
          }
        }
      }
      if (ok) break;
    }
    cand /= scale;  // final certified distances <= 1/2 after this division
    const double val = (delta * cand).trace().real();
    if (val > best) {
      best = val;
      a_best = cand;
    }
    cur = cand;  // continue the ascent from the repaired (feasible) point
  }
  a = a_best;
  return best;
}

W1Result w1(const Matrix& rho, const Matrix& sigma, const TensorFactorization& f,
            const W1Options& opt) {
  const Matrix delta = checked_delta(rho, sigma, f);
  W1Result out = w1_primal(rho, sigma, f, opt);
  if (delta.norm() <= 1e-13) return out;

  Matrix a = out.dual_observable;
  // With the multiplier warm start a few certified rounds suffice; stop
  // early once the bracket is tight.
  double best = -std::numeric_limits<double>::infinity();
  Matrix a_best = a;
  W1Options one = opt;
  one.dual_rounds = 1;
  Matrix cur = a;
  const double step0 = 0.5 / std::max(1e-12, delta.norm());
  for (int round = 1; round <= opt.dual_rounds; ++round) {
    Matrix trial = cur;
    const double val = w1_dual_ascent(delta, f, trial, one);
    if (val > best) {
      best = val;
      a_best = trial;
    }
    if (out.primal_value - best <= opt.tol) break;
    cur = a_best + (step0 / std::sqrt(static_cast<double>(round))) * delta;
  }

  out.dual_observable = a_best;
  out.dual_value = best;
  out.gap = out.primal_value - out.dual_value;
  out.value = 0.5 * (out.primal_value + out.dual_value);
  out.converged = out.gap <= opt.tol;
  return out;
}

DualNormCheck dual_norm_check(const Matrix& x, int site, const TensorFactorization& f,
                              double tol, int iters) {
  require_square(x, "dual_norm_check");
  require_finite(x, "dual_norm_check");
  if (x.rows() != f.total_dim()) throw ValidationError("dual_norm_check: matrix does not match factorization");
  const Matrix reduced = partial_trace_site(x, site, f);
  if (reduced.cwiseAbs().maxCoeff() > 1e-10 * (1.0 + x.cwiseAbs().maxCoeff()))
    throw ValidationError("dual_norm_check: witness must annihilate the site subalgebra");

  DualNormCheck out;
  out.half_trace_norm = 0.5 * trace_norm(x);

  const long dc = f.complement_dim(site);
  // Polar start: m = (1/2) V U^* attains sup Re tr(X m) over ||m|| <= 1/2.
  const ThinSvd svd = thin_svd(x);
  Matrix m = 0.5 * svd.v * svd.u.adjoint();
  Matrix c = Matrix::Zero(dc, dc);
  const Matrix grad_m = x.adjoint();
  const Matrix grad_c = partial_trace_site(x, site, f).adjoint();
  const double step0 = 0.5 / std::max(1e-12, operator_norm(x));

  // Value of Re tr(X (c + m)).
  const auto value_of = [&](const Matrix& cc, const Matrix& mm) {
    return ((x * (embed_complement(cc, site, f) + mm)).trace()).real();
  };

  out.ascent_value = value_of(c, m);
  for (int k = 1; k <= iters; ++k) {
    const double step = step0 / std::sqrt(static_cast<double>(k));
    m += step * grad_m;
    // Project onto the operator-norm ball of radius 1/2.
    const ThinSvd s = thin_svd(m);
    const RVec sv = s.s.cwiseMin(0.5);
    m = s.u * sv.asDiagonal() * s.v.adjoint();
    c += step * grad_c;
    out.ascent_value = std::max(out.ascent_value, value_of(c, m));
  }
  out.agree = std::abs(out.ascent_value - out.half_trace_norm) <= tol;
  return out;
}

}  // namespace qhm
