#ifndef TEAMAI_TASK_HPP
#define TEAMAI_TASK_HPP

#include <vector>

#include "teamai/instance.hpp"
#include "teamai/optimizer.hpp"
#include "teamai/wage.hpp"

namespace teamai {

// Task-level substitution: AI performs a fraction x_i of worker i's tasks,
// scaling his effort cost to (1-x_i)c, hiding his shirking with probability
// x_i, and paying him per task. Capacity may exceed one worker.

struct TaskStrategy {
  std::vector<double> x;   // task fractions in [0, 1]
  double capacity = 1.0;   // in (0, n]

  int size() const { return static_cast<int>(x.size()); }
  double total() const;
};

/// Throws OutOfRange, CapacityExceeded, or BadCapacity.
TaskStrategy validate_task_strategy(std::vector<double> x, double capacity);

/// Success probability when worker i shirks: his own AI covers him with
/// probability x_i; otherwise the shirk cascades until some successor's AI
/// share covers that position. Equals p_{i-1} at x = 0 and p_n at x_i = 1.
double task_shirk_rate(const Instance& inst, const TaskStrategy& x, int i);

/// Per-task wages c / (p_n - zeta_i); absent where x_i = 1. The worker's
/// total compensation (1-x_i) w_i is invariant to his own task share.
WageSchedule task_wages(const Instance& inst, const TaskStrategy& x);

/// Expected compensation cost. A position with x_i = 1 contributes only the
/// AI cost c; on 0/1 strategies this coincides with the worker-replacement
/// model's cost for the same replaced set.
CostBreakdown task_expected_cost(const Instance& inst, const TaskStrategy& x);

/// Finite-difference partials of the cost at an interior point; fractional
/// substitution is never worthwhile, so all of them should be positive.
struct TaskGradientReport {
  std::vector<double> partials;
  bool all_positive = false;
};

TaskGradientReport interior_gradient_check(const Instance& inst,
                                           const TaskStrategy& x);

/// Enumerates the candidate optima: replace all tasks of floor(capacity)
/// workers keeping the remaining workers consecutive, plus no replacement.
/// Ties go to fewer replacements, then to the front-most replaced set; the
/// full tie set is reported in the diagnostics. Throws BadCapacity.
Optimum solve_task_based(const Instance& inst, double capacity);

}  // namespace teamai

#endif  // TEAMAI_TASK_HPP
