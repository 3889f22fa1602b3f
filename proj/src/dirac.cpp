// Copyright the qhamming developers.
// SPDX-License-Identifier: Apache-2.0
#include "qhamming/dirac.hpp"

#include <cmath>
#include <vector>

#include "qhamming/circle.hpp"
#include "qhamming/errors.hpp"

namespace qhm {

Matrix left_mult_operator(const Matrix& a) {
  require_square(a, "left_mult_operator");
  const long d = a.rows();
  return kron(Matrix::Identity(d, d), a);
}

double site_dirac_commutator_norm(const CVec& f, const ProductSpace& p, int slot) {
  if (slot < 1 || slot > p.slots()) throw ValidationError("site_dirac_commutator_norm: slot out of range");
  if (f.size() != p.points()) throw ValidationError("site_dirac_commutator_norm: function size mismatch");
  const FiniteMetricSpace& fiber = p.factors[static_cast<size_t>(slot - 1)];
  const long m = fiber.size();
  const long rest = p.index.complement_dim(slot);
  if (m < 2) return 0.0;

  // Edge id for the ordered pair (s, t) over fiber copy r.
  const auto edge_id = [&](long r, long s, long t) {
    const long within = s * (m - 1) + (t < s ? t : t - 1);
    return r * m * (m - 1) + within;
  };
  const long edges = rest * m * (m - 1);

  Matrix dirac = Matrix::Zero(edges, edges);
  Matrix mult = Matrix::Zero(edges, edges);
  for (long r = 0; r < rest; ++r)
    for (long s = 0; s < m; ++s)
      for (long t = 0; t < m; ++t) {
        if (s == t) continue;
        const long e = edge_id(r, s, t);
        dirac(edge_id(r, t, s), e) = 1.0 / fiber.dist(s, t);
        mult(e, e) = f(p.index.compose(slot, s, r));  // source point value
      }
  return operator_norm(dirac * mult - mult * dirac);
}

RankOneSupReport rank_one_commutator_sup(const CVec& f, int samples, Rng& rng) {
  const long n = f.size();
  if (n < 1) throw ValidationError("rank_one_commutator_sup: empty function");
  std::vector<Cplx> pts(f.data(), f.data() + n);
  const Circle circ = smallest_enclosing_circle(pts);

  RankOneSupReport out;
  out.bound = circ.radius;

  const Matrix diag = f.asDiagonal();
  const auto comm_norm = [&](const CVec& psi) {
    const Matrix proj = psi * psi.adjoint();
    return operator_norm(proj * diag - diag * proj);
  };

  CVec psi = CVec::Zero(n);
  for (size_t j = 0; j < circ.support.size(); ++j)
    psi(circ.support[j]) = std::sqrt(std::max(0.0, circ.weights[j]));
  psi /= psi.norm();
  out.vector = psi;
  out.constructive = comm_norm(psi);

  for (int k = 0; k < samples; ++k) out.sampled = std::max(out.sampled, comm_norm(random_state(rng, n)));
  return out;
}

CommutantProjectionReport commutant_projection(const Matrix& a, int site,
                                               const TensorFactorization& f,
                                               const TildeOptions& opt) {
  CommutantProjectionReport out;
  out.cert = dist_to_tilde(a, site, f, opt);
  const long d = f.total_dim();
  const long dc = f.complement_dim(site);
  const Matrix& x = out.cert.dual_witness;
  if (x.rows() != d || trace_norm(x) < 1e-13) {
    out.projection = Matrix::Zero(d * d, d * d);
    out.achieved = 0.0;
    return out;
  }

  // Factor x^H = eta xi^H with ||xi||_HS = ||eta||_HS = ||x||_tr = 1.
  const ThinSvd svd = thin_svd(Matrix(x.adjoint()));
  const RVec& sv = svd.s;
  long rank = 0;
  while (rank < sv.size() && sv(rank) > 1e-14 * sv(0)) ++rank;
  const Matrix u = svd.u.leftCols(rank);
  const Matrix v = svd.v.leftCols(rank);
  const RVec root = sv.head(rank).cwiseSqrt();
  const Matrix xi = v * root.asDiagonal() * v.adjoint();
  const Matrix eta = u * root.asDiagonal() * v.adjoint();

  // Orbit of xi under left multiplication by the subalgebra, vectorized.
  Matrix orbit(d * d, dc * dc);
  Matrix unit = Matrix::Zero(dc, dc);
  for (long j = 0; j < dc; ++j)
    for (long k = 0; k < dc; ++k) {
      unit(j, k) = 1.0;
      const Matrix col = embed_complement(unit, site, f) * xi;
      orbit.col(j * dc + k) = Eigen::Map<const CVec>(col.data(), d * d);
      unit(j, k) = 0.0;
    }
  Eigen::ColPivHouseholderQR<Matrix> qr(orbit);
  qr.setThreshold(1e-12);
  const long orank = qr.rank();
  const Matrix q = Matrix(qr.householderQ()).leftCols(orank);
  out.projection = q * q.adjoint();

  const Matrix lmul = left_mult_operator(a);
  out.achieved = operator_norm(out.projection * lmul - lmul * out.projection);

  // Self checks: projection property, commutation with the left action, and
  // the two-sided bracket around the certified distance.
  if ((out.projection * out.projection - out.projection).norm() > 1e-9 * d)
    throw ConvergenceError("commutant_projection: projection not idempotent");
  Matrix probe = Matrix::Zero(dc, dc);
  for (long j = 0; j < dc; ++j)
    for (long k = 0; k <= j; ++k) {
      probe(j, k) = Cplx(0.3, 0.4);
      probe(k, j) = Cplx(0.3, -0.4);
      const Matrix lb = left_mult_operator(embed_complement(probe, site, f));
      if ((out.projection * lb - lb * out.projection).norm() > 1e-8 * (1.0 + lb.norm()))
        throw ConvergenceError("commutant_projection: projection leaves the commutant");
      probe(j, k) = probe(k, j) = 0.0;
    }
  // eta is orthogonal to the orbit (the witness annihilates the subalgebra),
  // which is what forces the commutator norm above the pairing Re tr(x a).
  const Eigen::Map<const CVec> eta_vec(eta.data(), d * d);
  if ((out.projection * eta_vec).norm() > 1e-7)
    throw ConvergenceError("commutant_projection: witness factor not orthogonal to the orbit");
  if (out.achieved < out.cert.lower_bound - 1e-6 || out.achieved > out.cert.value + 1e-6)
    throw ConvergenceError("commutant_projection: commutator norm escapes the certificate bracket");
  return out;
}

Matrix sample_commutant_projection(int site, const TensorFactorization& f, Rng& rng) {
  const long d = f.total_dim();
  if (d * d > 4096) throw ValidationError("sample_commutant_projection: doubled space too large");
  Matrix g = Matrix::Zero(d * d, d * d);
  for (int k = 0; k < 2; ++k) {
    const Matrix term =
        kron(random_matrix(rng, d, d), embed_site(random_matrix(rng, f.site_dim(site), f.site_dim(site)), site, f));
    g += term + term.adjoint();
  }
  const Eig eg = eig_hermitian(g);
  // Cut at the widest spectral gap in the middle half so the projection is a
  // stable function of g (and hence stays in the commutant).
  const long n = eg.values.size();
  long cut = n / 2;
  double widest = -1.0;
  for (long i = n / 4; i < (3 * n) / 4 && i + 1 < n; ++i) {
    const double gap = eg.values(i + 1) - eg.values(i);
    if (gap > widest) {
      widest = gap;
      cut = i + 1;
    }
  }
  const Matrix sel = eg.vectors.rightCols(n - cut);
  return sel * sel.adjoint();
}

}  // namespace qhm
