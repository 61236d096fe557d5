#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace setchroma {

struct VerifyConfig {
  int max_n = 5;
  int max_k = 3;
  std::uint64_t seed = 1;
  int random_graphs = 50;
  int random_weights = 20;
  /// Perturbs the formula side of the set-coloring sweep by one. Negative
  /// control for the harness; never set in the shipped tool.
  bool inject_fault = false;
};

struct CheckResult {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t mismatches = 0;
  std::string first_mismatch;

  bool passed() const noexcept { return mismatches == 0; }
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool all_passed() const noexcept {
    for (const auto& c : checks) {
      if (!c.passed()) return false;
    }
    return true;
  }
};

/// Runs every oracle-equivalence sweep. Deterministic for a given config.
VerifyReport run_verification(const VerifyConfig& config);

}  // namespace setchroma
