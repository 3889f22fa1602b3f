// Copyright the qhamming developers.
// SPDX-License-Identifier: Apache-2.0
#ifndef QHAMMING_DIRAC_HPP
#define QHAMMING_DIRAC_HPP

#include "qhamming/metric.hpp"
#include "qhamming/quotient.hpp"
#include "qhamming/tensor.hpp"

namespace qhm {

//! Left multiplication on the doubled space: with column-major
//! vectorization, vec(a m) = (I (x) a) vec(m).
Matrix left_mult_operator(const Matrix& a);

//! Slot Lipschitz constant realized as a commutator norm.  On the span of
//! ordered point pairs differing only in `slot`, let D swap a pair with
//! weight 1/d(x_slot, y_slot) and let f act by multiplication at the source
//! point; then ||[D, M_f]|| equals the slot-`slot` Lipschitz constant.
double site_dirac_commutator_norm(const CVec& f, const ProductSpace& p, int slot);

//! sup over rank-one projections q of ||[q, diag f]|| equals the distance
//! from diag f to the scalars (the enclosing-circle radius of the values).
struct RankOneSupReport {
  double bound = 0.0;         // distance from diag f to the scalars
  double constructive = 0.0;  // commutator norm at the constructed vector
  double sampled = 0.0;       // best commutator norm over random vectors
  CVec vector;                // constructed unit vector (circle support weights)
};
//! `constructive` uses the unit vector whose squared amplitudes are the
//! enclosing-circle support weights; it attains the bound.  `sampled` is a
//! Monte Carlo lower bound over `samples` random unit vectors.
RankOneSupReport rank_one_commutator_sup(const CVec& f, int samples, Rng& rng);

//! Site distance realized by a projection commuting with the left action of
//! the identity-on-`site` subalgebra.  The certificate's dual witness x
//! (trace norm 1, annihilating the subalgebra) factors as x^H = eta xi^H with
//! unit Hilbert-Schmidt vectors; the projection onto the subalgebra orbit of
//! xi commutes with the left action, and ||[p, left_mult(a)]|| lands between
//! the certificate's lower bound and its value.
struct CommutantProjectionReport {
  Matrix projection;         // acts on the doubled space, size d^2
  double achieved = 0.0;     // ||[projection, left_mult_operator(a)]||
  DistanceCertificate cert;  // two-sided distance certificate used
};
CommutantProjectionReport commutant_projection(const Matrix& a, int site,
                                               const TensorFactorization& f,
                                               const TildeOptions& opt = {});

//! Random projection commuting with the left action of the
//! identity-on-`site` subalgebra: a spectral projection (cut at a spectral
//! gap) of a random Hermitian element of the commutant.  Every such
//! projection q obeys ||[q, left_mult(a)]|| <= dist(a, subalgebra).
Matrix sample_commutant_projection(int site, const TensorFactorization& f, Rng& rng);

}  // namespace qhm

#endif
