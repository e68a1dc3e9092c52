#pragma once

#include <ostream>

namespace dualspline::cli {

enum ExitCode : int {
  kOk = 0,
  kIoError = 1,
  kValidationError = 2,
  kNumericalError = 3,
};

/// Entry point of the `dualspline` tool. Subcommands: reduce,
/// remove-knots, check, convert-power, pear-demo.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dualspline::cli
