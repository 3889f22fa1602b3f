// Copyright the qhamming developers.
// SPDX-License-Identifier: Apache-2.0
#ifndef QHAMMING_ERRORS_HPP
#define QHAMMING_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qhm {

//! Raised when an input violates a documented precondition (bad shapes,
//! non-finite entries, invalid metrics, malformed JSON payloads, ...).
class ValidationError : public std::invalid_argument {
public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

//! Raised when a numerical routine cannot reach its accuracy contract and
//! no partial result would be sound to return (rare; iterative solvers
//! normally return their best certificate with `converged = false` instead).
class ConvergenceError : public std::runtime_error {
public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qhm

#endif
