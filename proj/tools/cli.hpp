#pragma once

#include <ostream>

namespace opmeans::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kNumericalError = 2,
  kTheoremViolation = 3,
};

/// Entry point of the `opmeans` tool. Results without an --out file go to
/// `out`, diagnostics to `err`.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace opmeans::cli
