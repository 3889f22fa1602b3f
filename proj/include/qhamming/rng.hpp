// Copyright the qhamming developers.
// SPDX-License-Identifier: Apache-2.0
#ifndef QHAMMING_RNG_HPP
#define QHAMMING_RNG_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace qhm {

//! Deterministic random stream.
//!
//! All randomized routines in the library draw from this class so that a
//! fixed seed reproduces the same instances bit-for-bit on a given
//! platform.  The std distributions are avoided on purpose: the standard
//! pins the mt19937_64 engine but leaves distribution algorithms
//! implementation-defined, so uniform and normal variates are derived
//! from raw engine output here.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  //! Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  //! Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  //! Uniform integer in {lo, ..., hi} (inclusive).
  int uniform_int(int lo, int hi) {
    const int span = hi - lo + 1;
    int k = static_cast<int>(uniform() * span);
    if (k >= span) k = span - 1;  // guard the measure-zero edge
    return lo + k;
  }

  //! Standard normal via Box-Muller (no cached spare, keeps replay trivial).
  double gauss() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  //! Standard complex normal: E|z|^2 = 1.
  std::complex<double> cgauss() {
    const double re = gauss();
    const double im = gauss();
    return {re * 0.7071067811865475244, im * 0.7071067811865475244};
  }

  std::uint64_t raw() { return gen_(); }

private:
  std::mt19937_64 gen_;
};

}  // namespace qhm

#endif
