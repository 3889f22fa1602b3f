// Copyright the qhamming developers.
// SPDX-License-Identifier: Apache-2.0
#ifndef QHAMMING_TENSOR_HPP
#define QHAMMING_TENSOR_HPP

#include <complex>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qhamming/rng.hpp"

namespace qhm {

using Cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using CVec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;

//! Shape of a tensor-product decomposition: an ordered list of site
//! dimensions.  Site indices are 1-based throughout the public API; site 1
//! is the leftmost Kronecker factor, and composite indices are
//! lexicographic with site 1 most significant.
class TensorFactorization {
public:
  TensorFactorization() = default;
  explicit TensorFactorization(std::vector<int> site_dims);

  int sites() const { return static_cast<int>(dims_.size()); }
  int site_dim(int site) const;
  long total_dim() const { return total_; }
  //! Product of every site dimension except `site`.
  long complement_dim(int site) const;
  const std::vector<int>& site_dims() const { return dims_; }

  //! Composite index from a single-site index and the lexicographic index
  //! of the remaining sites (in their original order).
  long compose(int site, long site_idx, long rest_idx) const;
  //! Inverse of compose: (site index, remaining-sites index).
  std::pair<long, long> split(int site, long idx) const;

  bool operator==(const TensorFactorization& other) const { return dims_ == other.dims_; }

private:
  void check_site(int site) const;

  std::vector<int> dims_;
  std::vector<long> suffix_;  // suffix_[k] = product of dims_[k..n-1]
  long total_ = 1;
};

// --------------------------------------------------------------- algebra ---

//! Kronecker product, site order = argument order.
Matrix kron(const Matrix& a, const Matrix& b);
Matrix tensor_product(const std::vector<Matrix>& factors);

//! I (x) ... (x) b (x) ... (x) I with b at position `site`.
Matrix embed_site(const Matrix& b, int site, const TensorFactorization& f);

//! b acts on every site except `site` (in order) and as identity on `site`.
Matrix embed_complement(const Matrix& b, int site, const TensorFactorization& f);

//! Trace out the listed sites; the result lives on the remaining sites in
//! their original order.
Matrix partial_trace(const Matrix& x, const TensorFactorization& f, const std::vector<int>& sites_out);
Matrix partial_trace_site(const Matrix& x, int site, const TensorFactorization& f);
//! Keep only the listed sites (complement of partial_trace).
Matrix marginal(const Matrix& x, const TensorFactorization& f, const std::vector<int>& sites_keep);

//! Trace-preserving conditional expectation onto operators that act as the
//! identity on `site`: E_i(x) = I_i (x) ptr_i(x) / dim_i.
Matrix cond_expectation(const Matrix& x, int site, const TensorFactorization& f);

// ----------------------------------------------------------------- norms ---

double operator_norm(const Matrix& m);
double trace_norm(const Matrix& m);
double hs_norm(const Matrix& m);
//! Hilbert-Schmidt pairing Re tr(a^dagger b).
double hs_inner(const Matrix& a, const Matrix& b);

//! Singular values in descending order.  Hermitian and anti-Hermitian inputs
//! go through the self-adjoint eigensolver; everything else through the
//! eigenvalues of the Hermitian dilation [[0, m^H], [m, 0]].  The
//! divide-and-conquer SVD in the pinned Eigen release returns wrong values
//! for some complex matrices, so no code path here may use it.
RVec singular_values(const Matrix& m);

struct ThinSvd {
  Matrix u;  // rows(m) x r
  RVec s;    // descending
  Matrix v;  // cols(m) x r
};

//! Thin singular value decomposition m = u diag(s) v^H via one-sided Jacobi
//! (accurate for complex input, unlike the divide-and-conquer kernel).
ThinSvd thin_svd(const Matrix& m);

// --------------------------------------------------------------- spectra ---

struct Eig {
  RVec values;     // ascending
  Matrix vectors;  // orthonormal columns, phase-fixed
};

//! Eigendecomposition of a Hermitian matrix.  Input is symmetrized first;
//! eigenvalues come back ascending and each eigenvector's largest-modulus
//! entry is rotated to the positive real axis.  Throws ConvergenceError if
//! the residual ||Hv - lambda v|| exceeds 1e-10 * max(1, ||H||_F).
Eig eig_hermitian(const Matrix& h);

bool is_hermitian(const Matrix& m, double tol = 1e-12);
Matrix hermitize(const Matrix& m);

//! Clip eigenvalues of a Hermitian matrix into [lo, hi].
Matrix clip_spectrum(const Matrix& h, double lo, double hi);

//! Euclidean projection of v onto the l1 ball of the given radius.
RVec project_l1_ball(RVec v, double radius);

// --------------------------------------------------------------- sampling ---

Matrix random_matrix(Rng& rng, long rows, long cols);
Matrix random_hermitian(Rng& rng, long dim);
//! Full-rank Wishart density matrix G G^dagger / tr.
Matrix random_density(Rng& rng, long dim);
Matrix random_unitary(Rng& rng, long dim);
//! Haar-random unit vector.
CVec random_state(Rng& rng, long dim);

// ------------------------------------------------------------- validation ---

void require_finite(const Matrix& m, const char* what);
void require_square(const Matrix& m, const char* what);
//! Symmetrize and return; used when constructing Hermitian operands.
Matrix make_hermitian(const Matrix& m);
//! Validate trace 1 (within 1e-10) and spectrum >= -1e-10; returns input.
Matrix make_density(const Matrix& m);

}  // namespace qhm

#endif
