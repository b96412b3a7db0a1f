#ifndef TEAMAI_VERIFY_HPP
#define TEAMAI_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace teamai {

/// Outcome of one verification suite. Each suite checks one family of
/// analytic claims (closed forms, solver structure, equilibrium conditions,
/// Monte Carlo agreement, ...) at pinned tolerances on deterministic,
/// seed-derived batches of instances.
struct SuiteResult {
  std::string name;
  std::string title;
  bool pass = false;
  std::int64_t checks = 0;
  std::int64_t failures = 0;
  std::string detail;  // first counterexample, or a summary when passing
  double seconds = 0.0;
};

inline constexpr std::uint64_t kDefaultVerifySeed = 42;

/// Suite names in report order.
const std::vector<std::string>& verify_suite_names();

/// Runs one suite; throws Error(UnknownSuite) for an unrecognized name.
SuiteResult run_verify_suite(const std::string& name, std::uint64_t seed);

/// Runs every suite in report order.
std::vector<SuiteResult> run_all_verify_suites(std::uint64_t seed);

}  // namespace teamai

#endif  // TEAMAI_VERIFY_HPP
