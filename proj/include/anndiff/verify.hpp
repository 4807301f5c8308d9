#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace anndiff {

struct VerifyConfig {
  std::uint64_t seed = 42;
  /// Multiplies every tolerance gate; 1.0 runs the pinned thresholds.
  double tol_scale = 1.0;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  double worst = 0.0;  // primary observed measure
  double gate = 0.0;   // primary threshold after scaling
  std::string detail;
  std::string counterexample_json;  // first failure, empty when passing
};

/// The full invariant suite, one result per named check, fixed order.
std::vector<CheckResult> run_verification(const VerifyConfig& cfg);

}  // namespace anndiff
