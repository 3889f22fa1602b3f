// Copyright the qhamming developers.
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance gate: runs the full property battery with its pinned defaults
// (seed 20260815, solver tolerance 1e-6, every suite) and prints one
// PASS/FAIL line per criterion.  Exit status 0 iff every criterion holds.
#include <cstdio>

#include "qhamming/verify.hpp"

int main() {
  qhm::VerifyOptions opt;  // defaults are the pinned acceptance configuration
  const qhm::VerifyReport rep = qhm::run_verification(opt);
  const int total = static_cast<int>(rep.checks.size());
  int failed = 0;
  for (int i = 0; i < total; ++i) {
    const qhm::CheckResult& c = rep.checks[i];
    std::printf("[%2d/%d] %s  %-44s (max violation %.3e <= %.1e, %d instances, %.1fs)\n", i + 1,
                total, c.pass ? "PASS" : "FAIL", c.name.c_str(), c.max_violation, c.tolerance,
                c.instances, c.seconds);
    if (!c.pass) ++failed;
  }
  std::printf("%s: %d/%d acceptance criteria satisfied in %.1f s (seed %llu, tol %.1e)\n",
              failed == 0 ? "PASS" : "FAIL", total - failed, total, rep.seconds,
              static_cast<unsigned long long>(rep.seed), rep.tol);
  return failed == 0 ? 0 : 1;
}
