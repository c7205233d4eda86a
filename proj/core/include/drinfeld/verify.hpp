#pragma once

#include <string>
#include <vector>

namespace drinfeld::verify {

/// Outcome of one library-wide verification criterion.  passed requires
/// both the exact value checks and the runtime budget.
struct CriterionResult {
  std::string id;
  std::string title;
  bool passed = false;
  double seconds = 0.0;
  double budget_seconds = 0.0;
  std::string detail;
};

struct Options {
  /// Run only these ids (e.g. {"A1","A8"}); empty means all.
  std::vector<std::string> only;
  /// Worker threads for expansions (1 = strictly sequential).
  unsigned threads = 1;
  /// Test hook: the Goss recursion seed used by the A2 check.  Anything
  /// but 1 sabotages the table and must make A2 fail.
  long long goss_seed = 1;
};

/// Run the batch of end-to-end checks A1..A8 (exact comparisons against
/// the concrete q = 3 computations, the dual-route Goss equivalence, the
/// combinatorial identities, and the non-vanishing certificates).
std::vector<CriterionResult> run_paper_checks(const Options& opts = {});

bool all_passed(const std::vector<CriterionResult>& results);

} // namespace drinfeld::verify
