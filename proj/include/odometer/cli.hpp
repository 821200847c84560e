#pragma once

#include <iosfwd>

namespace odometer::cli {

/// Exit codes of the command-line front end.
inline constexpr int kSuccess = 0;
inline constexpr int kVerificationFailure = 1;
inline constexpr int kUsageError = 2;

/// Parses argv (argv[0] is the program name) and runs one subcommand:
///   enumerate  rationals of a numeration system in odometer order
///   orbit      iterates of a word or interval map
///   tree       levels of an odometric tree
///   codec      conversions between words and rationals
///   verify     self-check suites
/// Normal output goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace odometer::cli
