#pragma once

#include <ostream>

namespace dugg {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInputError = 2;

/// Entry point of the `dugg` tool; writes reports to `out` (or the --out
/// file) and diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dugg
