#ifndef TEAMAI_OPTIMIZER_HPP
#define TEAMAI_OPTIMIZER_HPP

#include <string>
#include <vector>

#include "teamai/chain.hpp"
#include "teamai/instance.hpp"
#include "teamai/wage.hpp"

namespace teamai {

enum class SolveMethod { ClosedForm, GridRefine, Enumeration };

const char* solve_method_name(SolveMethod m);

struct SolverDiagnostics {
  double grid_step = 0.0;
  std::int64_t grid_points = 0;
  int refine_passes = 0;
  bool heuristic = false;       // best point found, no global-optimality claim
  bool front_at_zero = false;   // solver pinned the front-most worker at 0
  std::vector<std::vector<double>> tie_set;  // equal-cost alternatives
  std::vector<std::string> notes;
};

struct Optimum {
  ReplacementStrategy strategy;
  WageSchedule wages;
  CostBreakdown cost;
  double utilization = 0.0;  // sum of replacement probabilities
  SolveMethod method = SolveMethod::GridRefine;
  SolverDiagnostics diagnostics;
};

/// Closed-form optimum for the power-law production p_k = alpha^(n-k) with
/// three workers: x = ((sqrt(1+alpha)-1)/alpha, 0, 1 - x_1) with wages
/// c/(1-alpha^2), c/((1-alpha) sqrt(1+alpha)), c/(1-alpha).
Optimum solve_oring(double alpha, double c);

/// Capacity is left unused at the optimum exactly when the first unit of
/// effort is proportionally more valuable than the rest: p_1^2 - p_3 p_0 > 0.
/// Three-worker chains only (throws WrongSize).
struct UtilizationCondition {
  bool underutilize = false;
  double margin = 0.0;  // p_1^2 - p_3 p_0
};

UtilizationCondition utilization_condition(const Instance& inst);

/// Numerical optimum for a three-worker chain: the middle worker is pinned
/// at zero, the (x_1, x_3) triangle is scanned on a coarse grid and the best
/// point is polished by golden-section line searches along the coordinate
/// and capacity-preserving directions.
Optimum solve_chain_n3(const Instance& inst);

/// Full n-dimensional simplex grid plus the same refinement, for any n >= 3.
/// Returns the best point found; diagnostics carry the heuristic flag since
/// no optimality structure is imposed.
Optimum solve_chain_general(const Instance& inst, double grid_step);

/// Expected cost of the two-sided mixture x = (rho, 0, ..., 0, 1-rho),
/// evaluated in closed form. Strictly convex in rho with equal endpoints, so
/// its interior minimum beats every pure strategy.
double family_cost(const Instance& inst, double rho);

/// With an AI that itself plays the trigger strategy, incentives no longer
/// depend on where AI is deployed and the principal simply replaces the
/// most expensive (end-most) worker with certainty.
Optimum solve_strategic(const Instance& inst);

/// Spread between the highest and lowest wage, with and without AI.
struct GapReport {
  double gap_no_ai = 0.0;  // max w - min w at x = 0
  double gap_at_x = 0.0;
  double ratio = 0.0;      // gap_at_x / gap_no_ai
};

/// Requires every x_i < 1 (throws FullyReplaced).
GapReport wage_gap_report(const Instance& inst, const ReplacementStrategy& x);

/// Expected worker payoffs (1-x_i)(p_n w_i - c) against the no-AI baseline.
struct PayoffReport {
  std::vector<double> payoffs;
  std::vector<double> baseline;  // payoffs at x = 0
  std::vector<double> deltas;    // payoffs - baseline
  std::string ordering;          // three-worker descriptor, e.g. "middle > end > front"
};

PayoffReport payoff_report(const Instance& inst, const ReplacementStrategy& x);

/// Threshold complementarity level at which the front-most worker's payoff
/// change under the optimal strategy flips sign: alpha_bar = beta^2 - 1 where
/// beta is the real root of beta^3 = beta + 1, located by bisection to 1e-12.
double front_payoff_alpha_threshold();

}  // namespace teamai

#endif  // TEAMAI_OPTIMIZER_HPP
