#pragma once

#include <string>
#include <vector>

#include "hilbcenter/center.hpp"
#include "hilbcenter/config.hpp"

namespace hilbcenter {

enum class CheckStatus { Pass, Fail, Skip };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

struct VerifyReport {
  int n = 0;
  std::vector<CheckResult> checks;

  bool all_passed() const;
  Json to_json() const;
  std::string to_text() const;
};

/// Runs the cross-module invariant suite at degree n: partition counting and
/// hook identities, character orthogonality, basis round trips, product
/// identities against the brute-force convolution (when n is small enough),
/// Heisenberg commutators, graded-ring properties against the Betti numbers,
/// localization data, and the symmetric-group quotient cross-check.  Checks
/// that only apply below a size cap are reported as skipped, never silently
/// dropped.
VerifyReport run_verify(const CenterAlgebra& algebra, int n,
                        const RunConfig& config);

}  // namespace hilbcenter
