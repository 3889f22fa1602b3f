// Copyright the qhamming developers.
// SPDX-License-Identifier: Apache-2.0
#include "qhamming/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "qhamming/errors.hpp"

namespace qhm {

TensorFactorization::TensorFactorization(std::vector<int> site_dims) : dims_(std::move(site_dims)) {
  if (dims_.empty()) throw ValidationError("factorization needs at least one site");
  for (int d : dims_) {
    if (d < 1) throw ValidationError("site dimensions must be >= 1");
  }
  suffix_.assign(dims_.size() + 1, 1);
  for (int k = static_cast<int>(dims_.size()) - 1; k >= 0; --k) {
    suffix_[k] = suffix_[k + 1] * dims_[k];
    if (suffix_[k] > (1L << 22)) throw ValidationError("total dimension too large");
  }
  total_ = suffix_[0];
}

void TensorFactorization::check_site(int site) const {
  if (site < 1 || site > sites())
    throw ValidationError("site index " + std::to_string(site) + " out of range 1.." +
                          std::to_string(sites()));
}

int TensorFactorization::site_dim(int site) const {
  check_site(site);
  return dims_[site - 1];
}

long TensorFactorization::complement_dim(int site) const {
  check_site(site);
  return total_ / dims_[site - 1];
}

long TensorFactorization::compose(int site, long site_idx, long rest_idx) const {
  check_site(site);
  const long after = suffix_[site];  // block size below this site
  const long lo = rest_idx % after;
  const long hi = rest_idx / after;
  return (hi * dims_[site - 1] + site_idx) * after + lo;
}

std::pair<long, long> TensorFactorization::split(int site, long idx) const {
  check_site(site);
  const long after = suffix_[site];
  const long lo = idx % after;
  const long mid = (idx / after) % dims_[site - 1];
  const long hi = idx / (after * dims_[site - 1]);
  return {mid, hi * after + lo};
}

// --------------------------------------------------------------- algebra ---

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix tensor_product(const std::vector<Matrix>& factors) {
  if (factors.empty()) throw ValidationError("tensor_product needs at least one factor");
  Matrix out = factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k) out = kron(out, factors[k]);
  return out;
}

Matrix embed_site(const Matrix& b, int site, const TensorFactorization& f) {
  require_square(b, "embed_site");
  if (b.rows() != f.site_dim(site)) throw ValidationError("embed_site: block does not match site dimension");
  const long d = f.total_dim();
  Matrix out = Matrix::Zero(d, d);
  for (long r = 0; r < d; ++r) {
    const auto [ar, pr] = f.split(site, r);
    for (long c = 0; c < d; ++c) {
      const auto [ac, pc] = f.split(site, c);
      if (pr == pc) out(r, c) = b(ar, ac);
    }
  }
  return out;
}

Matrix embed_complement(const Matrix& b, int site, const TensorFactorization& f) {
  require_square(b, "embed_complement");
  if (b.rows() != f.complement_dim(site))
    throw ValidationError("embed_complement: block does not match complement dimension");
  const long d = f.total_dim();
  Matrix out = Matrix::Zero(d, d);
  for (long r = 0; r < d; ++r) {
    const auto [ar, pr] = f.split(site, r);
    for (long c = 0; c < d; ++c) {
      const auto [ac, pc] = f.split(site, c);
      if (ar == ac) out(r, c) = b(pr, pc);
    }
  }
  return out;
}

Matrix partial_trace(const Matrix& x, const TensorFactorization& f, const std::vector<int>& sites_out) {
  require_square(x, "partial_trace");
  if (x.rows() != f.total_dim()) throw ValidationError("partial_trace: matrix does not match factorization");
  std::vector<int> out = sites_out;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (int s : out) f.site_dim(s);  // range check

  const int n = f.sites();
  std::vector<bool> traced(n + 1, false);
  for (int s : out) traced[s] = true;

  // Weight of each site digit inside a full composite index.
  std::vector<long> weight(n + 1, 1);
  for (int s = n - 1; s >= 1; --s) weight[s] = weight[s + 1] * f.site_dim(s + 1);

  long keep_dim = 1, trace_dim = 1;
  for (int s = 1; s <= n; ++s) (traced[s] ? trace_dim : keep_dim) *= f.site_dim(s);

  // Composite-index contribution of every kept (resp. traced) sub-index,
  // enumerated lexicographically over the kept (resp. traced) sites.
  std::vector<long> keep_map(keep_dim, 0), trace_map(trace_dim, 0);
  for (long k = 0; k < keep_dim; ++k) {
    long rem = k;
    for (int s = n; s >= 1; --s) {
      if (traced[s]) continue;
      keep_map[k] += (rem % f.site_dim(s)) * weight[s];
      rem /= f.site_dim(s);
    }
  }
  for (long t = 0; t < trace_dim; ++t) {
    long rem = t;
    for (int s = n; s >= 1; --s) {
      if (!traced[s]) continue;
      trace_map[t] += (rem % f.site_dim(s)) * weight[s];
      rem /= f.site_dim(s);
    }
  }

  Matrix res = Matrix::Zero(keep_dim, keep_dim);
  for (long r = 0; r < keep_dim; ++r)
    for (long c = 0; c < keep_dim; ++c) {
      Cplx acc = 0.0;
      for (long t = 0; t < trace_dim; ++t) acc += x(keep_map[r] + trace_map[t], keep_map[c] + trace_map[t]);
      res(r, c) = acc;
    }
  return res;
}

Matrix partial_trace_site(const Matrix& x, int site, const TensorFactorization& f) {
  return partial_trace(x, f, {site});
}

Matrix marginal(const Matrix& x, const TensorFactorization& f, const std::vector<int>& sites_keep) {
  std::vector<bool> keep(f.sites() + 1, false);
  for (int s : sites_keep) {
    f.site_dim(s);
    keep[s] = true;
  }
  std::vector<int> out;
  for (int s = 1; s <= f.sites(); ++s)
    if (!keep[s]) out.push_back(s);
  if (out.empty()) return x;
  return partial_trace(x, f, out);
}

Matrix cond_expectation(const Matrix& x, int site, const TensorFactorization& f) {
  const Matrix reduced = partial_trace_site(x, site, f) / static_cast<double>(f.site_dim(site));
  return embed_complement(reduced, site, f);
}

// ----------------------------------------------------------------- norms ---

double operator_norm(const Matrix& m) {
  require_finite(m, "operator_norm");
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  if (m.rows() == 1 && m.cols() == 1) return std::abs(m(0, 0));
  if (m.rows() == m.cols() && is_hermitian(m, 1e-13 * (1.0 + m.cwiseAbs().maxCoeff()))) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(hermitize(m), Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().maxCoeff();
  }
  return singular_values(m)(0);
}

double trace_norm(const Matrix& m) {
  require_finite(m, "trace_norm");
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  if (m.rows() == m.cols() && is_hermitian(m, 1e-13 * (1.0 + m.cwiseAbs().maxCoeff()))) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(hermitize(m), Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().sum();
  }
  return singular_values(m).sum();
}

RVec singular_values(const Matrix& m) {
  require_finite(m, "singular_values");
  const long r = m.rows(), c = m.cols();
  if (r == 0 || c == 0) return RVec(0);
  const double scale = 1e-13 * (1.0 + m.cwiseAbs().maxCoeff());
  if (r == c && (is_hermitian(m, scale) || is_hermitian(Cplx(0, 1) * m, scale))) {
    const Matrix h = is_hermitian(m, scale) ? hermitize(m) : hermitize(Cplx(0, 1) * m);
    Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
    RVec s = es.eigenvalues().cwiseAbs();
    std::sort(s.data(), s.data() + s.size(), std::greater<double>());
    return s;
  }
  Matrix dil = Matrix::Zero(r + c, r + c);
  dil.topRightCorner(c, r) = m.adjoint();
  dil.bottomLeftCorner(r, c) = m;
  Eigen::SelfAdjointEigenSolver<Matrix> es(dil, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw ConvergenceError("singular_values: eigensolver failed");
  const long k = std::min(r, c);
  // Spectrum of the dilation is {+s_i, -s_i} plus |r - c| zeros.
  RVec s = es.eigenvalues().tail(k).reverse().cwiseMax(0.0);
  return s;
}

ThinSvd thin_svd(const Matrix& m) {
  require_finite(m, "thin_svd");
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  ThinSvd out;
  out.u = svd.matrixU();
  out.s = svd.singularValues();
  out.v = svd.matrixV();
  return out;
}

double hs_norm(const Matrix& m) { return m.norm(); }

double hs_inner(const Matrix& a, const Matrix& b) { return (a.adjoint() * b).trace().real(); }

// --------------------------------------------------------------- spectra ---

Eig eig_hermitian(const Matrix& h) {
  require_square(h, "eig_hermitian");
  require_finite(h, "eig_hermitian");
  const Matrix hh = hermitize(h);
  Eigen::SelfAdjointEigenSolver<Matrix> es(hh);
  if (es.info() != Eigen::Success) throw ConvergenceError("hermitian eigensolver failed");
  Eig out{es.eigenvalues(), es.eigenvectors()};
  // Deterministic phase: largest-modulus entry of each column positive real.
  for (long j = 0; j < out.vectors.cols(); ++j) {
    long imax = 0;
    out.vectors.col(j).cwiseAbs().maxCoeff(&imax);
    const Cplx v = out.vectors(imax, j);
    if (std::abs(v) > 0) out.vectors.col(j) *= std::conj(v) / std::abs(v);
  }
  const double scale = std::max(1.0, hh.norm());
  const double resid = (hh * out.vectors - out.vectors * out.values.asDiagonal()).norm();
  if (resid > 1e-10 * scale) throw ConvergenceError("hermitian eigensolver residual too large");
  return out;
}

bool is_hermitian(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

Matrix hermitize(const Matrix& m) { return 0.5 * (m + m.adjoint()); }

Matrix clip_spectrum(const Matrix& h, double lo, double hi) {
  Eig e = eig_hermitian(h);
  RVec clipped = e.values.cwiseMax(lo).cwiseMin(hi);
  return e.vectors * clipped.asDiagonal() * e.vectors.adjoint();
}

RVec project_l1_ball(RVec v, double radius) {
  if (radius < 0) throw ValidationError("project_l1_ball: negative radius");
  const double l1 = v.cwiseAbs().sum();
  if (l1 <= radius) return v;
  // Find the soft threshold tau with sum max(|v|-tau, 0) = radius.
  std::vector<double> mag(v.size());
  for (long i = 0; i < v.size(); ++i) mag[i] = std::abs(v(i));
  std::sort(mag.begin(), mag.end(), std::greater<double>());
  double acc = 0.0, tau = 0.0;
  for (std::size_t k = 0; k < mag.size(); ++k) {
    acc += mag[k];
    const double cand = (acc - radius) / static_cast<double>(k + 1);
    if (k + 1 == mag.size() || cand >= mag[k + 1]) {
      tau = cand;
      break;
    }
  }
  for (long i = 0; i < v.size(); ++i) {
    const double m = std::abs(v(i));
    v(i) = m <= tau ? 0.0 : (v(i) > 0 ? m - tau : -(m - tau));
  }
  return v;
}

// --------------------------------------------------------------- sampling ---

Matrix random_matrix(Rng& rng, long rows, long cols) {
  Matrix g(rows, cols);
  for (long i = 0; i < rows; ++i)
    for (long j = 0; j < cols; ++j) g(i, j) = rng.cgauss();
  return g;
}

Matrix random_hermitian(Rng& rng, long dim) { return hermitize(random_matrix(rng, dim, dim)); }

Matrix random_density(Rng& rng, long dim) {
  const Matrix g = random_matrix(rng, dim, dim);
  Matrix w = g * g.adjoint();
  return w / w.trace().real();
}

Matrix random_unitary(Rng& rng, long dim) {
  const Matrix g = random_matrix(rng, dim, dim);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (long j = 0; j < dim; ++j) {
    const Cplx d = r(j, j);
    q.col(j) *= std::abs(d) > 0 ? d / std::abs(d) : 1.0;
  }
  return q;
}

CVec random_state(Rng& rng, long dim) {
  CVec v(dim);
  for (long i = 0; i < dim; ++i) v(i) = rng.cgauss();
  const double n = v.norm();
  return n > 0 ? CVec(v / n) : random_state(rng, dim);
}

// ------------------------------------------------------------- validation ---

void require_finite(const Matrix& m, const char* what) {
  if (!m.allFinite()) throw ValidationError(std::string(what) + ": non-finite entries");
}

void require_square(const Matrix& m, const char* what) {
  if (m.rows() != m.cols()) throw ValidationError(std::string(what) + ": matrix must be square");
}

Matrix make_hermitian(const Matrix& m) {
  require_square(m, "make_hermitian");
  require_finite(m, "make_hermitian");
  return hermitize(m);
}

Matrix make_density(const Matrix& m) {
  require_square(m, "make_density");
  require_finite(m, "make_density");
  const Matrix h = hermitize(m);
  if ((m - h).cwiseAbs().maxCoeff() > 1e-10)
    throw ValidationError("make_density: matrix is not Hermitian");
  if (std::abs(h.trace().real() - 1.0) > 1e-10) throw ValidationError("make_density: trace must be 1");
  Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-10) throw ValidationError("make_density: negative eigenvalue");
  return h;
}

}  // namespace qhm
