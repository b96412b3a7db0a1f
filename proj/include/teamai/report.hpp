#ifndef TEAMAI_REPORT_HPP
#define TEAMAI_REPORT_HPP

#include <cstdint>
#include <string>

#include <json.hpp>

#include "teamai/config.hpp"

namespace teamai {

inline constexpr int kReportSchemaVersion = 1;

/// Locale-independent decimal formatting with the given significant digits.
std::string format_sig(double value, int digits);

/// Writes via a temporary file in the same directory plus rename, so readers
/// never observe a half-written document. Throws Error(IoError).
void write_text_atomic(const std::string& path, const std::string& content);

/// A report in both machine-readable and human-readable form.
struct Rendered {
  nlohmann::json doc;
  std::string table;
};

/// Solves the model selected by the config and renders the full report:
/// strategy, wages, cost breakdown, and the model-specific diagnostics
/// (gradient decomposition, wage gap, payoffs, utilization condition, and
/// equilibrium check for three-worker chains).
Rendered build_solve_report(const Config& cfg);

/// Runs the chain Monte Carlo described by the config and renders the
/// report with analytic reference values and z-scores.
Rendered build_simulate_report(const Config& cfg, std::int64_t trials,
                               std::uint64_t seed);

/// CSV over the three-worker power-law family: one row per alpha with the
/// optimal strategy, wages, wage gaps, payoffs, and the front-most payoff
/// change. Columns:
///   alpha,x1,x3,w1,w2,w3,gap0,gapx,gap_ratio,payoff1,payoff2,payoff3,delta1
/// Values carry 12 significant digits; lines end with LF. Throws BadRange.
std::string sweep_csv(double alpha_start, double alpha_end, int steps);

}  // namespace teamai

#endif  // TEAMAI_REPORT_HPP
