#pragma once

#include <ostream>

#include "dioph/cli/config.hpp"

namespace dioph::cli {

enum ExitCode : int { kOk = 0, kInvalidInput = 1, kVerificationFailed = 2 };

/// Runs cfg.subcommand and writes the report to `out` (or cfg.out).
/// Diagnostics go to `err`.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv (flags override the --config file) and runs.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dioph::cli
