// Copyright the qhamming developers.
// SPDX-License-Identifier: Apache-2.0
#ifndef QHAMMING_HAMMING_HPP
#define QHAMMING_HAMMING_HPP

#include <vector>

#include "qhamming/quotient.hpp"

namespace qhm {

//! Per-site seminorm data.  `cert` is the certificate for
//! l_i(a) = 2 dist(a, tilde-A_i); its dual witness is scaled so that
//! lower_bound = Re tr(witness a) still holds (trace norm <= 2).
struct SiteSeminorm {
  int site = 0;
  DistanceCertificate cert;
};

struct SeminormReport {
  double value = 0.0;           // max_i l_i(a), from certified upper bounds
  double lower = 0.0;           // max_i certified lower bounds
  double l0 = 0.0;              // dist(a, C I)
  std::vector<SiteSeminorm> sites;
  double max_gap = 0.0;         // worst per-site certificate gap
  bool converged = false;
};

//! The product seminorm: largest per-site seminorm, each certified from
//! both sides.
SeminormReport quantum_hamming_seminorm(const Matrix& a, const TensorFactorization& f,
                                        const TildeOptions& opt = {});

//! Interpolating decomposition of rho - sigma: X_k = rho_k - rho_{k+1}
//! with rho_k = (sigma marginal on sites < k) (x) (rho marginal on
//! sites >= k).  Identities guaranteed: sum_k X_k = rho - sigma,
//! ptr_k X_k = 0, and tr(X_k (I..b..I)) = tr((rho - sigma)(I..b..I)) for
//! any site-k observable b.
std::vector<Matrix> telescope_decomposition(const Matrix& rho, const Matrix& sigma,
                                            const TensorFactorization& f);

//! The two-sided comparison chain for Hermitian a:
//!   2 l0(a) <= sum_k l_k(a) <= n max_k l_k(a) <= 2 n l0(a).
//! Slacks are reported against a budget assembled from the per-site
//! certificate gaps, so a violation beyond the budget is a genuine bug.
struct ChainReport {
  double two_l0 = 0.0;
  double sum_li = 0.0;
  double n_lqh = 0.0;
  double two_n_l0 = 0.0;
  double slack_budget = 0.0;  // total certificate gap, scaled
  double worst_violation = 0.0;
  bool holds = false;
  SeminormReport seminorms;
};

ChainReport seminorm_chain_check(const Matrix& a, const TensorFactorization& f,
                                 const TildeOptions& opt = {});

//! Extremal observable certifying that the state space has diameter n in
//! the transport metric induced by the seminorm: a sum of single-site
//! sign observables, normalized by its *computed* seminorm, paired with
//! the two product basis states it separates.  lower_bound = tr((rho_mu -
//! rho_nu) observable) is a valid transport-distance lower bound and
//! comes out as n up to solver gaps.
struct WitnessResult {
  Matrix observable;       // normalized: seminorm <= 1
  double seminorm = 0.0;   // computed seminorm of the unnormalized sum
  Matrix rho_mu, rho_nu;   // product basis states
  double lower_bound = 0.0;
  SeminormReport report;
};

WitnessResult diameter_witness(const TensorFactorization& f, const TildeOptions& opt = {});

}  // namespace qhm

#endif
