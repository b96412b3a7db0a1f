#ifndef TEAMAI_CHAIN_HPP
#define TEAMAI_CHAIN_HPP

#include <vector>

#include "teamai/instance.hpp"
#include "teamai/wage.hpp"

namespace teamai {

// Sequential-chain incentive machinery. Workers are indexed 0..n-1 from the
// front of the chain; worker i observes a perfect signal of worker i-1's
// contribution. Under the trigger profile a shirker drags every later human
// into shirking until the cascade hits an AI position.

/// Project success probability from worker i's perspective if he shirks on
/// path, given everyone else plays the trigger profile. Lies in
/// [p_i, p_{n-1}]; for the end-most worker it equals p_{n-1} regardless of x.
/// Undefined at x_i = 1 (throws FullyReplaced).
double shirk_success_rate(const Instance& inst, const ReplacementStrategy& x,
                          int i);

/// Success probability from worker i's perspective (i >= 1) if he shirks
/// after observing that his predecessor shirked first. Conditions on neither
/// i nor i-1 being replaced; throws Degenerate when x_i + x_{i-1} = 1 leaves
/// no such event.
double offpath_shirk_rate(const Instance& inst, const ReplacementStrategy& x,
                          int i);

/// Cheapest wages sustaining the all-effort trigger equilibrium:
/// w_i = c / (p_n - shirk_success_rate(i)). Entries are absent where x_i = 1.
WageSchedule optimal_wages(const Instance& inst, const ReplacementStrategy& x);

/// Expected compensation cost under the optimal wages, extended by
/// continuity to x_i = 1 (that worker's wage term vanishes and only the AI
/// cost c remains). Continuous on the whole feasible set.
CostBreakdown expected_cost(const Instance& inst, const ReplacementStrategy& x);

/// The three forces behind a marginal increase of x_i, evaluated
/// analytically. total = -direct_saving + direct_incentive +
/// indirect_incentive equals the partial derivative of expected_cost.
struct GradientDecomposition {
  double direct_saving = 0.0;      // p_n w_i - c, the avoided expected wage
  double direct_incentive = 0.0;   // (1-x_i) p_n dw_i/dx_i
  double indirect_incentive = 0.0; // sum_{k<i} (1-x_k) p_n dw_k/dx_i
  double total = 0.0;
};

/// Requires every coordinate strictly below 1 (throws Boundary otherwise);
/// at the capacity boundary sum(x) = capacity the derivative is one-sided.
GradientDecomposition cost_gradient(const Instance& inst,
                                    const ReplacementStrategy& x, int i);

/// Expected costs of the n+1 pure strategies: replacing nobody, or exactly
/// one worker with certainty. Replacing the front-most and the end-most
/// worker always cost the same and are cheapest; with p_0 = 0 replacing
/// nobody ties them.
struct PureStrategyCosts {
  double none = 0.0;                  // x = (0, ..., 0)
  std::vector<double> replace_worker; // x = unit vector on worker i

  double min_cost() const;
  std::vector<std::pair<std::string, double>> rows() const;
};

PureStrategyCosts pure_strategy_costs(const Instance& inst);

/// Per-worker verification of the trigger equilibrium under a given wage
/// schedule. on_path_slack = p_n w_i - c - zeta_i w_i must vanish (the
/// cheapest wages make workers exactly indifferent); off_path_slack =
/// zetahat_i w_i - (p_{n-1} w_i - c) must be nonnegative (shirking is the
/// best response to an observed shirk).
struct EquilibriumEntry {
  int worker = 0;
  bool replaced = false;        // x_i = 1: no contract, nothing to check
  double on_path_slack = 0.0;
  bool on_path_pass = false;
  bool off_path_applicable = false;  // i >= 1 and x_i + x_{i-1} < 1
  double off_path_slack = 0.0;
  bool off_path_pass = false;
};

struct EquilibriumReport {
  std::vector<EquilibriumEntry> entries;
  double tol = 0.0;
  bool pass = false;  // every applicable check passed

  const EquilibriumEntry& entry(int i) const {
    return entries[static_cast<std::size_t>(i)];
  }
};

/// Failures are reported in the entries, never thrown; a wage schedule whose
/// shape contradicts the strategy throws InconsistentWages.
EquilibriumReport verify_trigger_equilibrium(const Instance& inst,
                                             const ReplacementStrategy& x,
                                             const WageSchedule& w,
                                             double tol = 1e-9);

/// Expected cost when the AI itself plays the trigger strategy (shirks after
/// an observed shirk). Every worker then faces zeta_i = p_{i-1} no matter
/// where AI is deployed, so the cost is linear in x.
CostBreakdown strategic_ai_cost(const Instance& inst,
                                const ReplacementStrategy& x);

}  // namespace teamai

#endif  // TEAMAI_CHAIN_HPP
