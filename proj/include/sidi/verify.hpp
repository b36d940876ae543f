#pragma once

#include <string>
#include <vector>

#include "sidi/orderings.hpp"

namespace sidi {

enum class CheckStatus { Pass, Fail, Skipped };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

struct VerifyOptions {
  int n_max = 30;
  double tie_tolerance = kTieTolerance;
  int grid_points = 10000;
  double oracle_tolerance = 1e-8;
};

struct VerifySummary {
  std::vector<CheckResult> checks;
  bool all_pass() const;
  const CheckResult* first_failure() const;
};

/// Runs every ordering, inequality, monotonicity and oracle check that
/// applies to budgets up to opt.n_max. Checks whose range is empty are
/// reported as skipped.
VerifySummary run_verification(const VerifyOptions& opt);

/// Worst |closed form - root-finder spectrum| over cycles of length
/// [2, n_max], both signs, energy and iota energy. `checks` receives the
/// number of comparisons made.
double cycle_oracle_worst_error(int n_max, int& checks);

}  // namespace sidi
