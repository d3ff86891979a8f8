#pragma once

#include <string>
#include <vector>

namespace ample {

struct CriterionResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// The full verification suite: eight independent criteria, each reported
/// with a one-line summary.  Deterministic (fixed seeds throughout).
/// `on_result`, when set, is invoked as each criterion finishes.
std::vector<CriterionResult> run_acceptance(void (*on_result)(const CriterionResult&) = nullptr);

}  // namespace ample
