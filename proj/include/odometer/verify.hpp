#pragma once

// Self-check suites behind `odometer verify`. Each suite runs a fixed list of
// cases; the budget bounds the depth of the exhaustive sweeps (word sums,
// denominators, orbit lengths), with 12 giving the full-size checks.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace odometer {

enum class Suite { Conjugacy, Renorm, Counting, Oracles, Periods, Distribution };

std::string_view to_string(Suite s);

/// A suite name, or "all" for every suite in declaration order.
/// Throws std::invalid_argument.
std::vector<Suite> parse_suites(std::string_view name);

struct CaseResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteResult {
  Suite suite;
  std::vector<CaseResult> cases;
  double seconds = 0.0;
  bool passed() const;
};

/// Throws std::invalid_argument if budget < 4.
SuiteResult run_suite(Suite suite, unsigned budget);

/// Runs the suites on worker threads; results come back in input order.
std::vector<SuiteResult> run_suites(const std::vector<Suite>& suites, unsigned budget);

}  // namespace odometer
