// Copyright the qhamming developers.
// SPDX-License-Identifier: Apache-2.0
#ifndef QHAMMING_VERIFY_HPP
#define QHAMMING_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace qhm {

struct VerifyOptions {
  std::uint64_t seed = 20260815;
  double tol = 1e-6;        // target accuracy handed to the solvers
  std::vector<int> sizes;   // if nonempty, only run blocks with this many sites/slots
  std::string suite = "all";  // classical | quantum | dirac | all
};

//! Outcome of one property check.  `max_violation` is measured in the units
//! stated by `law`; for checks that bundle sub-assertions with different
//! tolerances it is the worst violation-to-tolerance ratio and `tolerance`
//! is 1.
struct CheckResult {
  std::string name;
  std::string suite;
  std::string law;
  int instances = 0;
  double max_violation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  double seconds = 0.0;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  double tol = 0.0;
  std::string suite;
  std::vector<CheckResult> checks;
  bool pass = false;
  double seconds = 0.0;
};

//! Run the property battery.  Every numerical claim the library makes is
//! exercised on randomized instances with pinned tolerances; the report
//! lists one line per law.
VerifyReport run_verification(const VerifyOptions& opt);

}  // namespace qhm

#endif
