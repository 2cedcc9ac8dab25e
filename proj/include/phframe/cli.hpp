#pragma once

#include "phframe/rational.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace phframe::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kValidation = 2,
  kUnsupported = 3,
  kPole = 4,
};

/// Runs the command line `args` (args[0] is the program name). Results go to
/// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Decimal rendering of an exact rational with the given number of
/// significant digits.
std::string to_decimal(const Rat& x, int significant_digits);

/// Accepts "p/q", integers and plain decimals such as "-0.25".
Rat parse_number_arg(const std::string& text);

}  // namespace phframe::cli
