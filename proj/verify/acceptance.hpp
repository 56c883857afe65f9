#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace phasest::acceptance {

enum class Level { Fast, Full };

struct Criterion {
  std::string id;    // C01 .. C12
  std::string name;  // snake_case label
  double tolerance;  // primary tolerance; may be overridden by id
  double budget_seconds;
};

struct Result {
  Criterion criterion;
  bool passed;
  std::string detail;
  double seconds;
};

struct Options {
  Level level = Level::Fast;
  /// Replaces a criterion's primary tolerance, keyed by id or name.
  std::map<std::string, double> tolerance_overrides;
  /// Restrict to these ids (empty = all).
  std::vector<std::string> only;
};

const std::vector<Criterion>& criteria();

/// Runs the criteria. Full level additionally fails a criterion that
/// exceeds its runtime budget.
std::vector<Result> run(const Options& options);

/// One line per result: "[PASS] C01 name: detail" (+ timing at Full).
void print(std::ostream& os, const std::vector<Result>& results, Level level);

}  // namespace phasest::acceptance
