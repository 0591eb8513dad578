#pragma once

#include <string>
#include <vector>

namespace quadop {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
};

/// Invariant suites over the catalog; an exception inside a check counts as a failure.
std::vector<CheckResult> run_selfcheck();

}  // namespace quadop
