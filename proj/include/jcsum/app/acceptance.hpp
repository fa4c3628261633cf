#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jcsum::app {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;  ///< measured values against their limits
  double seconds = 0.0;
};

struct AcceptanceOptions {
  /// Multiplies every numeric tolerance; 0 forces every tolerance check to fail.
  double tolerance_scale = 1.0;
  /// Criteria to run; empty runs all twelve.
  std::vector<int> only;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts, std::ostream& info);

/// Prints one `[PASS]`/`[FAIL]` line per criterion; returns 0 iff all pass.
int cmd_selftest(const AcceptanceOptions& opts, std::ostream& out);

}  // namespace jcsum::app
