#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace phasest::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kNumericalFailure = 1;
inline constexpr int kInvalidArguments = 2;

/// Runs one command. `args` excludes the program name. Results go to `out`
/// (or to --output), one-line error reasons to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace phasest::cli
