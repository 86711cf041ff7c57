#pragma once

#include <string>
#include <vector>

namespace rodring {

enum class CheckStatus { Pass, Fail, ExpectedMismatch };

struct CheckResult {
  std::string name;
  CheckStatus status;
  std::string detail;  // case counts; first counterexample on failure
};

struct VerifyOptions {
  int max_square_n = 17;     // transfer == lucas == closed form, squares
  int max_rect_dim = 10;     // same, rectangles
  int max_ring_cells = 16;   // exhaustive ring oracle
  int max_geo_dim = 7;       // geometric-vs-ring equality, min(m,n) >= 3
  int max_burnside_n = 12;   // closed forms vs first-principles Burnside
  int max_orbit_n = 5;       // closed forms vs direct orbit counting
};

// Runs every cross-method suite and the per-(m,n) as-printed audits, in a
// fixed order. All statuses are reported; nothing throws for a mismatch.
std::vector<CheckResult> run_verification(const VerifyOptions& opts = {});

// Exit-code policy: false iff any Fail, or (strict) any ExpectedMismatch.
bool verification_passed(const std::vector<CheckResult>& results, bool strict);

}  // namespace rodring
