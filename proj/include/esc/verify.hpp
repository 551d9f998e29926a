#pragma once

#include <string>
#include <vector>

namespace esc {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // tolerance and observed value
};

struct VerifyOptions {
  int max_n = 12;            // cap for exact-oracle checks
  bool inject_fault = false; // test-only: perturb u_n by 1e-3 to prove sensitivity
};

// Cross-module invariant suite: Bell identities, recurrence consistency,
// DP vs closed forms, exact-oracle equivalence, sampler table normalization
// and mode equivalence.
std::vector<CheckResult> run_verification(const VerifyOptions& opts);

}  // namespace esc
