#pragma once

#include <string>
#include <vector>

namespace lgdot {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidateOptions {
  unsigned seed = 20260811u;

  // Test hook: when nonzero, every propagation used by the suite is
  // perturbed by this amount after the fact, so the suite must fail.
  // Negative control for the validation machinery itself.
  double corrupt_propagator = 0.0;
};

// The oracle suite: ideal-model extremum, classical bound without
// coherence, correlator route equality, matrix-exponential vs RK4
// certification (with convergence order), analytic pipeline agreement,
// mixture scaling with the eta threshold, trend monotonicity, and a
// density-matrix validity audit.
std::vector<CheckResult> run_validation(const ValidateOptions& options = {});

}  // namespace lgdot
