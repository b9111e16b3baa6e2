#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace dioph::acceptance {

enum class Outcome { pass, fail, excluded };

struct CriterionResult {
  int id = 0;
  std::string name;
  Outcome outcome = Outcome::fail;
  std::string detail;
  double seconds = 0.0;
  double budget_seconds = 0.0;
};

struct Options {
  unsigned workers = 1;
  /// Criterion ids to run; empty runs all of them.
  std::vector<int> only;
  /// Called after each criterion finishes.
  std::function<void(const CriterionResult&)> on_result;
};

std::vector<CriterionResult> run_all(const Options& opts = {});

/// "PASS", "FAIL" or "EXCLUDED".
std::string_view to_string(Outcome o);

/// One line per criterion.
void print_result(std::ostream& os, const CriterionResult& r);

/// True when no criterion failed. Excluded entries do not count either way.
bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace dioph::acceptance
