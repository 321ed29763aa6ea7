#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace greedy {

struct CheckResult {
  std::string name;
  bool passed = false;
  double residual = 0.0;  // worst case observed
  double budget = 0.0;    // tolerance the residual is held to
};

struct VerificationReport {
  std::uint64_t n_max = 0;
  std::vector<double> s_grid;
  std::vector<CheckResult> checks;

  [[nodiscard]] bool all_passed() const noexcept;
};

struct VerifyOptions {
  std::uint64_t n_max = 2048;
  std::vector<double> s_grid{0.5, 1.0, 1.5, 2.0};
};

// verify_all is quadratic in N_max.
inline constexpr std::uint64_t kVerifyBudget = std::uint64_t{1} << 14;

/// Runs every identity and inequality check; failures are reported in the
/// result, not thrown. DomainError for s < 0 or N_max < 2, BudgetError if
/// N_max > kVerifyBudget.
VerificationReport verify_all(const VerifyOptions& options = {});

}  // namespace greedy
