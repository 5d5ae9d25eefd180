#pragma once

#include <string>
#include <vector>

namespace rtdg {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Quick invariant checks on small meshes (a few seconds in total).
std::vector<CheckResult> run_selftest();

}  // namespace rtdg
