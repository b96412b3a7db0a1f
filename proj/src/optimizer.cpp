#include "teamai/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace teamai {

namespace {

constexpr double kCoordCap = 1.0 - 1e-9;  // keep clear of the x_i = 1 singularity
constexpr double kSnapZero = 1e-8;        // final reporting snaps below this to 0
constexpr double kTieTol = 1e-12;

// Expected-cost evaluator on raw coordinates (no validation), with the same
// continuity extension at x_i = 1 as expected_cost().
double cost_eval(const Instance& inst, const std::vector<double>& x) {
  const int n = inst.n();
  const double pn = inst.p(n);
  const double c = inst.c();
  double total = 0.0;
  for (int i = 0; i < n; ++i) total += x[static_cast<std::size_t>(i)] * c;
  for (int i = 0; i < n; ++i) {
    const double xi = x[static_cast<std::size_t>(i)];
    if (xi >= 1.0) continue;
    double zeta = inst.p(i);
    for (int k = i + 1; k < n; ++k) {
      zeta += x[static_cast<std::size_t>(k)] / (1.0 - xi) * (inst.p(n - k + i) - inst.p(i));
    }
    total += (1.0 - xi) * pn * c / (pn - zeta);
  }
  return total;
}

// Golden-section minimum of f on [lo, hi]; also compares the interval
// endpoints so constrained minima land exactly on the boundary.
std::pair<double, double> golden_min(const std::function<double(double)>& f,
                                     double lo, double hi, double tol) {
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo, b = hi;
  double x1 = b - gr * (b - a);
  double x2 = a + gr * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > tol) {
    if (f1 <= f2) {
      b = x2; x2 = x1; f2 = f1;
      x1 = b - gr * (b - a);
      f1 = f(x1);
    } else {
      a = x1; x1 = x2; f1 = f2;
      x2 = a + gr * (b - a);
      f2 = f(x2);
    }
  }
  double best_t = 0.5 * (a + b);
  double best_f = f(best_t);
  for (double t : {lo, hi}) {
    const double ft = f(t);
    if (ft < best_f) { best_f = ft; best_t = t; }
  }
  return {best_t, best_f};
}

struct RefineOutcome {
  std::vector<double> x;
  double cost = 0.0;
  int passes = 0;
};

// Repeated line minimization along coordinate directions and all pairwise
// transfer directions e_i - e_j. The transfer directions matter once the
// capacity constraint binds: pure coordinate moves stall on that face.
RefineOutcome refine_directions(const Instance& inst, std::vector<double> x,
                                double cost, double capacity,
                                const std::vector<int>& free_coords) {
  std::vector<std::vector<double>> dirs;
  const std::size_t n = x.size();
  for (int i : free_coords) {
    std::vector<double> d(n, 0.0);
    d[static_cast<std::size_t>(i)] = 1.0;
    dirs.push_back(d);
  }
  for (std::size_t a = 0; a < free_coords.size(); ++a) {
    for (std::size_t b = a + 1; b < free_coords.size(); ++b) {
      std::vector<double> d(n, 0.0);
      d[static_cast<std::size_t>(free_coords[a])] = 1.0;
      d[static_cast<std::size_t>(free_coords[b])] = -1.0;
      dirs.push_back(d);
    }
  }

  RefineOutcome out;
  const int max_passes = 200;
  for (int pass = 0; pass < max_passes; ++pass) {
    double moved = 0.0;
    for (const auto& d : dirs) {
      double tmin = -std::numeric_limits<double>::infinity();
      double tmax = std::numeric_limits<double>::infinity();
      double dsum = 0.0, xsum = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        dsum += d[i];
        xsum += x[i];
        if (d[i] > 0.0) {
          tmin = std::max(tmin, (0.0 - x[i]) / d[i]);
          tmax = std::min(tmax, (kCoordCap - x[i]) / d[i]);
        } else if (d[i] < 0.0) {
          tmin = std::max(tmin, (kCoordCap - x[i]) / d[i]);
          tmax = std::min(tmax, (0.0 - x[i]) / d[i]);
        }
      }
      if (dsum > 1e-15) {
        tmax = std::min(tmax, (capacity - xsum) / dsum);
      } else if (dsum < -1e-15) {
        tmin = std::max(tmin, (capacity - xsum) / dsum);
      }
      if (!(tmax - tmin > 1e-12)) continue;

      auto line = [&](double t) {
        std::vector<double> xt = x;
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          xt[i] = std::clamp(xt[i] + t * d[i], 0.0, kCoordCap);
          sum += xt[i];
        }
        if (sum > capacity) {
          return std::numeric_limits<double>::infinity();
        }
        return cost_eval(inst, xt);
      };
      auto [t_best, f_best] = golden_min(line, tmin, tmax, 1e-10);
      if (f_best < cost) {
        for (std::size_t i = 0; i < n; ++i) {
          x[i] = std::clamp(x[i] + t_best * d[i], 0.0, kCoordCap);
        }
        cost = f_best;
        moved = std::max(moved, std::abs(t_best));
      }
    }
    out.passes = pass + 1;
    if (moved < 1e-8) break;
  }
  out.x = std::move(x);
  out.cost = cost;
  return out;
}

// Snaps near-zero coordinates, repairs sub-ulp capacity overshoot, validates.
ReplacementStrategy finish_strategy(std::vector<double> x, double capacity) {
  double sum = 0.0;
  for (double& v : x) {
    if (v < kSnapZero) v = 0.0;
    sum += v;
  }
  if (sum > capacity) {
    double excess = sum - capacity;
    if (excess > 1e-6) {
      fail(Errc::CapacityExceeded, "solver produced an infeasible point");
    }
    for (std::size_t i = 0; i < x.size() && excess > 0.0; ++i) {
      const double take = std::min(excess, x[i]);
      x[i] -= take;
      excess -= take;
    }
  }
  return validate_strategy(std::move(x), capacity);
}

Optimum finish_optimum(const Instance& inst, std::vector<double> x,
                       double capacity, SolveMethod method,
                       SolverDiagnostics diag) {
  Optimum opt{finish_strategy(std::move(x), capacity),
              WageSchedule{},
              CostBreakdown{},
              0.0,
              method,
              std::move(diag)};
  opt.wages = optimal_wages(inst, opt.strategy);
  opt.cost = expected_cost(inst, opt.strategy);
  opt.utilization = opt.strategy.total();
  if (opt.strategy.x(0) == 0.0) opt.diagnostics.front_at_zero = true;
  return opt;
}

}  // namespace

const char* solve_method_name(SolveMethod m) {
  switch (m) {
    case SolveMethod::ClosedForm: return "closed-form";
    case SolveMethod::GridRefine: return "grid+refine";
    case SolveMethod::Enumeration: return "enumeration";
  }
  return "unknown";
}

Optimum solve_oring(double alpha, double c) {
  if (!(alpha > 0.0) || !(alpha < 1.0)) {
    fail(Errc::BadAlpha, "alpha must lie strictly inside (0, 1)");
  }
  const Instance inst = oring_instance(alpha, 3, c);
  // (sqrt(1+a)-1)/a rewritten to avoid cancellation for small alpha
  const double x1 = 1.0 / (std::sqrt(1.0 + alpha) + 1.0);
  const std::vector<double> x{x1, 0.0, 1.0 - x1};

  SolverDiagnostics diag;
  diag.notes.push_back("closed-form solution for p_k = alpha^(n-k), n = 3");

  Optimum opt{validate_strategy(x, 1.0), WageSchedule{},      CostBreakdown{},
              0.0,                       SolveMethod::ClosedForm, std::move(diag)};
  opt.wages.w = {c / (1.0 - alpha * alpha),
                 c / ((1.0 - alpha) * std::sqrt(1.0 + alpha)),
                 c / (1.0 - alpha)};
  opt.cost = expected_cost(inst, opt.strategy);
  opt.utilization = opt.strategy.total();
  return opt;
}

UtilizationCondition utilization_condition(const Instance& inst) {
  if (inst.n() != 3) {
    fail(Errc::WrongSize, "the utilization margin is defined for n = 3");
  }
  UtilizationCondition out;
  out.margin = inst.p(1) * inst.p(1) - inst.p(3) * inst.p(0);
  out.underutilize = out.margin > 0.0;
  return out;
}

Optimum solve_chain_n3(const Instance& inst) {
  if (inst.n() != 3) {
    fail(Errc::WrongSize, "solve_chain_n3 requires a three-worker chain");
  }
  const double capacity = 1.0;
  const double step = 1.0 / 200.0;
  const int cells = 200;

  // The middle worker is never replaced at an optimum, so scan (x_1, x_3).
  std::vector<double> best{0.0, 0.0, 0.0};
  double best_cost = std::numeric_limits<double>::infinity();
  double best_sum = 0.0;
  std::int64_t points = 0;
  std::vector<double> x(3, 0.0);
  for (int i = 0; i <= cells; ++i) {
    for (int j = 0; j + i <= cells; ++j) {
      x[0] = static_cast<double>(i) / cells;
      x[2] = static_cast<double>(j) / cells;
      const double cost = cost_eval(inst, x);
      ++points;
      const double sum = x[0] + x[2];
      if (cost < best_cost - kTieTol ||
          (cost < best_cost + kTieTol && sum < best_sum)) {
        best_cost = cost;
        best = x;
        best_sum = sum;
      }
    }
  }

  // Clamp grid vertices away from x_i = 1 before polishing.
  for (double& v : best) v = std::min(v, kCoordCap);
  best_cost = cost_eval(inst, best);
  RefineOutcome refined =
      refine_directions(inst, best, best_cost, capacity, {0, 2});

  SolverDiagnostics diag;
  diag.grid_step = step;
  diag.grid_points = points;
  diag.refine_passes = refined.passes;
  return finish_optimum(inst, refined.x, capacity, SolveMethod::GridRefine,
                        std::move(diag));
}

Optimum solve_chain_general(const Instance& inst, double grid_step) {
  if (!(grid_step > 0.0) || grid_step > 0.5) {
    fail(Errc::OutOfRange, "grid_step must lie in (0, 0.5]");
  }
  const double capacity = 1.0;
  const int n = inst.n();
  const int cells = std::max(1, static_cast<int>(std::llround(1.0 / grid_step)));

  std::vector<double> best(static_cast<std::size_t>(n), 0.0);
  double best_cost = std::numeric_limits<double>::infinity();
  double best_sum = 0.0;
  std::int64_t points = 0;

  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  std::vector<double> x(static_cast<std::size_t>(n), 0.0);
  std::function<void(int, int)> enumerate = [&](int pos, int used) {
    if (pos == n) {
      const double cost = cost_eval(inst, x);
      ++points;
      double sum = 0.0;
      for (double v : x) sum += v;
      if (cost < best_cost - kTieTol ||
          (cost < best_cost + kTieTol && sum < best_sum)) {
        best_cost = cost;
        best = x;
        best_sum = sum;
      }
      return;
    }
    for (int v = 0; v + used <= cells; ++v) {
      x[static_cast<std::size_t>(pos)] = static_cast<double>(v) / cells;
      enumerate(pos + 1, used + v);
    }
  };
  enumerate(0, 0);

  for (double& v : best) v = std::min(v, kCoordCap);
  best_cost = cost_eval(inst, best);
  std::vector<int> free_coords(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) free_coords[static_cast<std::size_t>(i)] = i;
  RefineOutcome refined =
      refine_directions(inst, best, best_cost, capacity, free_coords);

  SolverDiagnostics diag;
  diag.grid_step = 1.0 / cells;
  diag.grid_points = points;
  diag.refine_passes = refined.passes;
  diag.heuristic = n > 3;  // optimum structure is only characterized for n = 3
  if (diag.heuristic) {
    diag.notes.push_back("best grid point after refinement; no optimality claim");
  }
  return finish_optimum(inst, refined.x, capacity, SolveMethod::GridRefine,
                        std::move(diag));
}

double family_cost(const Instance& inst, double rho) {
  const int n = inst.n();
  const double pn = inst.p(n);
  const double c = inst.c();
  // x = (rho, 0, ..., 0, 1-rho): the front-most worker faces zeta = p_1, the
  // end-most p_{n-1}, and each worker in between the rho-mixture of its two
  // cascade outcomes.
  double total = 1.0;
  total += (1.0 - rho) * pn / (pn - inst.p(1));
  total += rho * pn / (pn - inst.p(n - 1));
  for (int i = 1; i <= n - 2; ++i) {
    const double zeta = (1.0 - rho) * inst.p(i + 1) + rho * inst.p(i);
    total += pn / (pn - zeta);
  }
  return c * total;
}

Optimum solve_strategic(const Instance& inst) {
  const int n = inst.n();
  SolverDiagnostics diag;
  // With zeta_i = p_{i-1} everywhere the cost is linear in x, so only the
  // n+1 pure strategies matter; record the whole enumeration.
  const ReplacementStrategy none = no_replacement(n);
  double none_cost = strategic_ai_cost(inst, none).total;
  diag.notes.push_back("pure-strategy costs: none=" + std::to_string(none_cost));
  int best_j = -1;
  double best_cost = none_cost;
  for (int j = 0; j < n; ++j) {
    std::vector<double> xj(static_cast<std::size_t>(n), 0.0);
    xj[static_cast<std::size_t>(j)] = 1.0;
    const double cost = strategic_ai_cost(inst, validate_strategy(xj, 1.0)).total;
    diag.notes.push_back("pure-strategy costs: worker " + std::to_string(j + 1) +
                         "=" + std::to_string(cost));
    if (cost < best_cost) {
      best_cost = cost;
      best_j = j;
    }
  }
  std::vector<double> x(static_cast<std::size_t>(n), 0.0);
  if (best_j >= 0) x[static_cast<std::size_t>(best_j)] = 1.0;

  Optimum opt{validate_strategy(x, 1.0), WageSchedule{},          CostBreakdown{},
              0.0,                       SolveMethod::Enumeration, std::move(diag)};
  opt.cost = strategic_ai_cost(inst, opt.strategy);
  opt.utilization = opt.strategy.total();
  opt.wages.w.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (opt.strategy.x(i) >= 1.0) continue;
    opt.wages.w[static_cast<std::size_t>(i)] =
        inst.c() / (inst.p(n) - inst.p(i));
  }
  return opt;
}

GapReport wage_gap_report(const Instance& inst, const ReplacementStrategy& x) {
  const int n = inst.n();
  for (int i = 0; i < n; ++i) {
    if (x.x(i) >= 1.0) {
      fail(Errc::FullyReplaced,
           "wage gap undefined when some worker is fully replaced");
    }
  }
  const WageSchedule base = optimal_wages(inst, no_replacement(n));
  const WageSchedule at_x = optimal_wages(inst, x);
  auto spread = [n](const WageSchedule& ws) {
    double lo = ws.value(0), hi = ws.value(0);
    for (int i = 1; i < n; ++i) {
      lo = std::min(lo, ws.value(i));
      hi = std::max(hi, ws.value(i));
    }
    return hi - lo;
  };
  GapReport out;
  out.gap_no_ai = spread(base);
  out.gap_at_x = spread(at_x);
  out.ratio = out.gap_at_x / out.gap_no_ai;
  return out;
}

PayoffReport payoff_report(const Instance& inst, const ReplacementStrategy& x) {
  const int n = inst.n();
  const double pn = inst.p(n);
  const double c = inst.c();
  const WageSchedule at_x = optimal_wages(inst, x);
  const WageSchedule base = optimal_wages(inst, no_replacement(n));

  PayoffReport out;
  out.payoffs.resize(static_cast<std::size_t>(n), 0.0);
  out.baseline.resize(static_cast<std::size_t>(n), 0.0);
  out.deltas.resize(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    const double pay =
        x.x(i) >= 1.0 ? 0.0 : (1.0 - x.x(i)) * (pn * at_x.value(i) - c);
    out.payoffs[static_cast<std::size_t>(i)] = pay;
    out.baseline[static_cast<std::size_t>(i)] = pn * base.value(i) - c;
    out.deltas[static_cast<std::size_t>(i)] =
        pay - out.baseline[static_cast<std::size_t>(i)];
  }
  if (n == 3) {
    const char* names[3] = {"front", "middle", "end"};
    std::vector<int> order{0, 1, 2};
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return out.payoffs[static_cast<std::size_t>(a)] >
             out.payoffs[static_cast<std::size_t>(b)];
    });
    out.ordering = std::string(names[order[0]]) + " > " + names[order[1]] +
                   " > " + names[order[2]];
  }
  return out;
}

double front_payoff_alpha_threshold() {
  // Real root of g(b) = b^3 - b - 1 on [1, 2], then alpha = beta^2 - 1.
  static const double alpha_bar = [] {
    double lo = 1.0, hi = 2.0;
    while (hi - lo > 1e-12) {
      const double mid = 0.5 * (lo + hi);
      const double g = mid * mid * mid - mid - 1.0;
      (g > 0.0 ? hi : lo) = mid;
    }
    const double beta = 0.5 * (lo + hi);
    return beta * beta - 1.0;
  }();
  return alpha_bar;
}

}  // namespace teamai
