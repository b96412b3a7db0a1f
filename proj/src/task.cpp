#include "teamai/task.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace teamai {

namespace {

void check_size(const Instance& inst, const TaskStrategy& x) {
  if (x.size() != inst.n()) {
    fail(Errc::BadLength, "task strategy has " + std::to_string(x.size()) +
                              " entries for a team of " +
                              std::to_string(inst.n()));
  }
}

}  // namespace

double TaskStrategy::total() const {
  return std::accumulate(x.begin(), x.end(), 0.0);
}

TaskStrategy validate_task_strategy(std::vector<double> x, double capacity) {
  if (!(capacity > 0.0)) {
    fail(Errc::BadCapacity, "task capacity must be positive");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] >= 0.0) || !(x[i] <= 1.0)) {
      fail(Errc::OutOfRange, "x[" + std::to_string(i) + "] outside [0, 1]");
    }
    sum += x[i];
  }
  if (capacity > static_cast<double>(x.size())) {
    fail(Errc::BadCapacity, "task capacity cannot exceed the team size");
  }
  if (sum > capacity) {
    fail(Errc::CapacityExceeded, "sum of task fractions exceeds capacity");
  }
  return TaskStrategy{std::move(x), capacity};
}

double task_shirk_rate(const Instance& inst, const TaskStrategy& x, int i) {
  check_size(inst, x);
  const int n = inst.n();
  if (i < 0 || i >= n) fail(Errc::OutOfRange, "worker index " + std::to_string(i));
  // Worker i shirks. His own AI share covers the position with probability
  // x_i; otherwise the shirk is visible and cascades down the chain until a
  // successor's AI share covers that position, stopping it.
  double zeta = x.x[static_cast<std::size_t>(i)] * inst.p(n);
  double carry = 1.0 - x.x[static_cast<std::size_t>(i)];  // prod of (1-x_j), j = i..i+k-1
  for (int k = 1; k <= n - 1 - i; ++k) {
    zeta += inst.p(n - k) * x.x[static_cast<std::size_t>(i + k)] * carry;
    carry *= 1.0 - x.x[static_cast<std::size_t>(i + k)];
  }
  zeta += inst.p(i) * carry;  // nobody covered: only the i-1 predecessors count
  return zeta;
}

WageSchedule task_wages(const Instance& inst, const TaskStrategy& x) {
  check_size(inst, x);
  const int n = inst.n();
  WageSchedule ws;
  ws.w.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (x.x[static_cast<std::size_t>(i)] >= 1.0) continue;
    const double zeta = task_shirk_rate(inst, x, i);
    ws.w[static_cast<std::size_t>(i)] = inst.c() / (inst.p(n) - zeta);
  }
  return ws;
}

CostBreakdown task_expected_cost(const Instance& inst, const TaskStrategy& x) {
  check_size(inst, x);
  const int n = inst.n();
  const double pn = inst.p(n);
  CostBreakdown cb;
  cb.per_worker.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double xi = x.x[static_cast<std::size_t>(i)];
    const double ai = xi * inst.c();
    double wage = 0.0;
    if (xi < 1.0) {
      const double zeta = task_shirk_rate(inst, x, i);
      wage = (1.0 - xi) * pn * inst.c() / (pn - zeta);
    }
    cb.ai_cost += ai;
    cb.wage_cost += wage;
    cb.per_worker[static_cast<std::size_t>(i)] = ai + wage;
  }
  cb.total = cb.ai_cost + cb.wage_cost;
  return cb;
}

TaskGradientReport interior_gradient_check(const Instance& inst,
                                           const TaskStrategy& x) {
  check_size(inst, x);
  const int n = inst.n();
  for (int i = 0; i < n; ++i) {
    if (x.x[static_cast<std::size_t>(i)] >= 1.0) {
      fail(Errc::Boundary, "interior gradient requires every x_i < 1");
    }
  }
  TaskGradientReport out;
  out.partials.resize(static_cast<std::size_t>(n));
  out.all_positive = true;
  const double h = 1e-6;
  for (int i = 0; i < n; ++i) {
    TaskStrategy lo = x, hi = x;
    const double xi = x.x[static_cast<std::size_t>(i)];
    const double down = std::min(h, xi);           // one-sided at the borders
    const double up = std::min(h, 1.0 - 1e-9 - xi);
    lo.x[static_cast<std::size_t>(i)] = xi - down;
    hi.x[static_cast<std::size_t>(i)] = xi + up;
    const double fl = task_expected_cost(inst, lo).total;
    const double fh = task_expected_cost(inst, hi).total;
    const double partial = (fh - fl) / (down + up);
    out.partials[static_cast<std::size_t>(i)] = partial;
    if (!(partial > 0.0)) out.all_positive = false;
  }
  return out;
}

Optimum solve_task_based(const Instance& inst, double capacity) {
  const int n = inst.n();
  if (!(capacity > 0.0) || capacity > static_cast<double>(n)) {
    fail(Errc::BadCapacity, "capacity must lie in (0, n]");
  }
  const int replacements = static_cast<int>(std::floor(capacity));

  // Candidates: every 0/1 vector replacing exactly `replacements` workers
  // with the remaining workers forming one contiguous block, plus the
  // no-replacement benchmark. Fractional allocations only raise the cost.
  std::vector<std::vector<double>> candidates;
  candidates.emplace_back(static_cast<std::size_t>(n), 0.0);
  if (replacements > 0) {
    const int remaining = n - replacements;
    if (remaining == 0) {
      candidates.emplace_back(static_cast<std::size_t>(n), 1.0);
    } else {
      // High start first: the replaced set {0..start-1, start+r..n-1} is then
      // lexicographically smallest first (front-most replacements lead).
      for (int start = n - remaining; start >= 0; --start) {
        std::vector<double> cand(static_cast<std::size_t>(n), 1.0);
        for (int i = start; i < start + remaining; ++i) {
          cand[static_cast<std::size_t>(i)] = 0.0;
        }
        candidates.push_back(std::move(cand));
      }
    }
  }

  double best_cost = std::numeric_limits<double>::infinity();
  std::size_t best_idx = 0;
  std::vector<std::size_t> tied;
  for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
    const TaskStrategy cand{candidates[ci], capacity};
    const double cost = task_expected_cost(inst, cand).total;
    if (cost < best_cost - 1e-12) {
      best_cost = cost;
      best_idx = ci;
      tied.assign(1, ci);
    } else if (cost <= best_cost + 1e-12) {
      tied.push_back(ci);
      // Fewer replacements win ties; the candidate list is ordered with the
      // no-replacement benchmark first and replaced sets front-most first,
      // so the earliest tied index is the canonical representative.
    }
  }
  best_idx = tied.front();

  SolverDiagnostics diag;
  for (std::size_t ci : tied) diag.tie_set.push_back(candidates[ci]);
  if (tied.size() > 1) {
    diag.notes.push_back(std::to_string(tied.size()) +
                         " candidates tie within 1e-12; returning the one with "
                         "fewer replacements, front-most first");
  }

  const TaskStrategy chosen{candidates[best_idx], capacity};
  Optimum opt{validate_strategy(candidates[best_idx], capacity),
              task_wages(inst, chosen),
              task_expected_cost(inst, chosen),
              0.0,
              SolveMethod::Enumeration,
              std::move(diag)};
  opt.utilization = opt.strategy.total();
  return opt;
}

}  // namespace teamai
