#ifndef TEAMAI_STAR_HPP
#define TEAMAI_STAR_HPP

#include <vector>

#include "teamai/instance.hpp"
#include "teamai/wage.hpp"

namespace teamai {

// Star topology: workers 0..n-2 act in parallel (peripheral) and each sends
// a signal only to the central worker at position n-1, the information hub.

/// Peripheral workers face zeta = p_{n-2} + x_central/(1-x_i) (p_{n-1} -
/// p_{n-2}); the central worker always faces p_{n-1}. Throws FullyReplaced
/// at x_i = 1.
double star_shirk_rate(const Instance& inst, const ReplacementStrategy& x,
                       int i);

/// Expected compensation cost under the optimal star wages, extended by
/// continuity at x_i = 1. Invariant under permutations of the peripheral
/// coordinates.
CostBreakdown star_expected_cost(const Instance& inst,
                                 const ReplacementStrategy& x);

/// Wages c / (p_n - zeta) from the star shirk rates; absent where x_i = 1.
WageSchedule star_wages(const Instance& inst, const ReplacementStrategy& x);

/// Sufficient condition for exhausting capacity on the peripheral workers:
/// margin = p_{n-1}^2 - p_n p_{n-2} <= 0.
struct StarCondition {
  bool holds = false;
  double margin = 0.0;
};

StarCondition star_condition(const Instance& inst);

/// When the condition holds, every split of the full capacity across the
/// peripheral workers with x_central = 0 is optimal; the equal split is
/// returned as the canonical representative, with the cost spread across
/// random splits recorded as evidence of the indifference. When the
/// condition fails, a 2-D grid over (common peripheral share, central share)
/// is searched instead and flagged heuristic.
struct StarSolution {
  ReplacementStrategy strategy;
  WageSchedule wages;
  CostBreakdown cost;
  bool canonical = false;
  double condition_margin = 0.0;
  double split_spread = 0.0;  // max |cost - canonical cost| over 10 random splits
  bool heuristic = false;
};

StarSolution solve_star(const Instance& inst);

}  // namespace teamai

#endif  // TEAMAI_STAR_HPP
