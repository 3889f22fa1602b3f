// Copyright the qhamming developers.
// SPDX-License-Identifier: Apache-2.0
#include "qhamming/hamming.hpp"

#include <algorithm>
#include <cmath>

#include "qhamming/errors.hpp"

namespace qhm {

SeminormReport quantum_hamming_seminorm(const Matrix& a, const TensorFactorization& f,
                                        const TildeOptions& opt) {
  SeminormReport rep;
  rep.l0 = l0(a, opt.tol);
  rep.sites.reserve(f.sites());
  for (int site = 1; site <= f.sites(); ++site) {
    SiteSeminorm s;
    s.site = site;
    s.cert = l_i(a, site, f, opt);
    rep.value = std::max(rep.value, s.cert.value);
    rep.lower = std::max(rep.lower, s.cert.lower_bound);
    rep.max_gap = std::max(rep.max_gap, s.cert.gap);
    rep.sites.push_back(std::move(s));
  }
  rep.converged = true;
  for (const auto& s : rep.sites) rep.converged = rep.converged && s.cert.converged;
  return rep;
}

std::vector<Matrix> telescope_decomposition(const Matrix& rho, const Matrix& sigma,
                                            const TensorFactorization& f) {
  require_square(rho, "telescope_decomposition");
  require_square(sigma, "telescope_decomposition");
  if (rho.rows() != f.total_dim() || sigma.rows() != f.total_dim())
    throw ValidationError("telescope_decomposition: state does not match factorization");
  require_finite(rho, "telescope_decomposition");
  require_finite(sigma, "telescope_decomposition");

  const int n = f.sites();
  // rho_k = (sigma on sites 1..k-1) (x) (rho on sites k..n); rho_1 = rho,
  // rho_{n+1} = sigma.
  const auto interpolant = [&](int k) -> Matrix {
    if (k <= 1) return rho;
    if (k >= n + 1) return sigma;
    std::vector<int> head, tail;
    for (int s = 1; s < k; ++s) head.push_back(s);
    for (int s = k; s <= n; ++s) tail.push_back(s);
    return kron(marginal(sigma, f, head), marginal(rho, f, tail));
  };

  std::vector<Matrix> xs;
  xs.reserve(n);
  Matrix prev = interpolant(1);
  for (int k = 1; k <= n; ++k) {
    Matrix next = interpolant(k + 1);
    xs.push_back(prev - next);
    prev = std::move(next);
  }
  return xs;
}

ChainReport seminorm_chain_check(const Matrix& a, const TensorFactorization& f,
                                 const TildeOptions& opt) {
  if (!is_hermitian(a, 1e-10 * (1.0 + a.cwiseAbs().maxCoeff())))
    throw ValidationError("seminorm_chain_check expects a Hermitian operator");
  ChainReport rep;
  rep.seminorms = quantum_hamming_seminorm(hermitize(a), f, opt);
  const int n = f.sites();

  rep.two_l0 = 2.0 * rep.seminorms.l0;
  rep.sum_li = 0.0;
  double gap_sum = 0.0, gap_max = 0.0;
  for (const auto& s : rep.seminorms.sites) {
    rep.sum_li += s.cert.value;
    gap_sum += std::max(s.cert.gap, 0.0);
    gap_max = std::max(gap_max, std::max(s.cert.gap, 0.0));
  }
  rep.n_lqh = n * rep.seminorms.value;
  rep.two_n_l0 = 2.0 * n * rep.seminorms.l0;

  // Certified values are upper bounds, so each link can undershoot by at
  // most the relevant certificate gaps (plus eigensolver noise).
  const double eps = 1e-9 * (1.0 + rep.two_n_l0);
  const double v1 = rep.two_l0 - rep.sum_li;          // needs <= gap_sum
  const double v2 = rep.sum_li - rep.n_lqh;           // exact arithmetic fact
  const double v3 = rep.n_lqh - rep.two_n_l0;         // needs <= n * gap_max
  rep.slack_budget = gap_sum + n * gap_max + eps;
  rep.worst_violation = std::max({v1 - gap_sum - eps, v2 - eps, v3 - n * gap_max - eps});
  rep.holds = rep.worst_violation <= 0.0;
  return rep;
}

WitnessResult diameter_witness(const TensorFactorization& f, const TildeOptions& opt) {
  const int n = f.sites();
  for (int s = 1; s <= n; ++s)
    if (f.site_dim(s) < 2)
      throw ValidationError("diameter_witness: every site must have dimension >= 2");

  const long d = f.total_dim();
  WitnessResult out;
  Matrix sum = Matrix::Zero(d, d);
  for (int s = 1; s <= n; ++s) {
    Matrix sign = Matrix::Zero(f.site_dim(s), f.site_dim(s));
    sign(0, 0) = 1.0;
    sign(1, 1) = -1.0;
    sum += embed_site(sign, s, f);
  }

  out.report = quantum_hamming_seminorm(sum, f, opt);
  out.seminorm = out.report.value;
  if (out.seminorm <= 0) throw ConvergenceError("diameter_witness: degenerate seminorm");
  out.observable = sum / out.seminorm;

  // Product basis states concentrated on the +1 and -1 sign patterns.
  Matrix mu = Matrix::Ones(1, 1), nu = Matrix::Ones(1, 1);
  for (int s = 1; s <= n; ++s) {
    Matrix e0 = Matrix::Zero(f.site_dim(s), f.site_dim(s));
    Matrix e1 = Matrix::Zero(f.site_dim(s), f.site_dim(s));
    e0(0, 0) = 1.0;
    e1(1, 1) = 1.0;
    mu = kron(mu, e0);
    nu = kron(nu, e1);
  }
  out.rho_mu = mu;
  out.rho_nu = nu;
  // The normalized observable has seminorm <= 1 (the computed seminorm is
  // a certified upper bound), so this pairing lower-bounds the transport
  // distance between the two states; it evaluates to 2n / seminorm.
  out.lower_bound = ((mu - nu) * out.observable).trace().real();
  return out;
}

}  // namespace qhm
