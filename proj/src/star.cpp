#include "teamai/star.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "teamai/rng.hpp"

namespace teamai {

namespace {

void check_star(const Instance& inst, const ReplacementStrategy& x) {
  if (x.size() != inst.n()) {
    fail(Errc::BadLength, "strategy has " + std::to_string(x.size()) +
                              " entries for a team of " +
                              std::to_string(inst.n()));
  }
}

double star_cost_eval(const Instance& inst, const std::vector<double>& x) {
  const int n = inst.n();
  const double pn = inst.p(n);
  const double c = inst.c();
  const double xc = x[static_cast<std::size_t>(n - 1)];
  double total = 0.0;
  for (double v : x) total += v * c;
  for (int i = 0; i < n - 1; ++i) {
    const double xi = x[static_cast<std::size_t>(i)];
    if (xi >= 1.0) continue;
    const double zeta =
        inst.p(n - 2) + xc / (1.0 - xi) * (inst.p(n - 1) - inst.p(n - 2));
    total += (1.0 - xi) * pn * c / (pn - zeta);
  }
  if (xc < 1.0) {
    total += (1.0 - xc) * pn * c / (pn - inst.p(n - 1));
  }
  return total;
}

}  // namespace

double star_shirk_rate(const Instance& inst, const ReplacementStrategy& x,
                       int i) {
  check_star(inst, x);
  const int n = inst.n();
  if (i < 0 || i >= n) fail(Errc::OutOfRange, "worker index " + std::to_string(i));
  if (x.x(i) >= 1.0) {
    fail(Errc::FullyReplaced, "shirk rate undefined for worker " +
                                  std::to_string(i + 1) + " with x_i = 1");
  }
  if (i == n - 1) {
    // The central worker has no successors: his shirk removes exactly one
    // contribution and nothing cascades.
    return inst.p(n - 1);
  }
  // A peripheral shirk drags only the central worker along, unless the
  // central position happens to be held by AI.
  const double xc = x.x(n - 1);
  return inst.p(n - 2) + xc / (1.0 - x.x(i)) * (inst.p(n - 1) - inst.p(n - 2));
}

WageSchedule star_wages(const Instance& inst, const ReplacementStrategy& x) {
  check_star(inst, x);
  const int n = inst.n();
  WageSchedule ws;
  ws.w.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (x.x(i) >= 1.0) continue;
    ws.w[static_cast<std::size_t>(i)] =
        inst.c() / (inst.p(n) - star_shirk_rate(inst, x, i));
  }
  return ws;
}

CostBreakdown star_expected_cost(const Instance& inst,
                                 const ReplacementStrategy& x) {
  check_star(inst, x);
  const int n = inst.n();
  const double pn = inst.p(n);
  CostBreakdown cb;
  cb.per_worker.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double xi = x.x(i);
    const double ai = xi * inst.c();
    double wage = 0.0;
    if (xi < 1.0) {
      const double zeta = star_shirk_rate(inst, x, i);
      wage = (1.0 - xi) * pn * inst.c() / (pn - zeta);
    }
    cb.ai_cost += ai;
    cb.wage_cost += wage;
    cb.per_worker[static_cast<std::size_t>(i)] = ai + wage;
  }
  cb.total = cb.ai_cost + cb.wage_cost;
  return cb;
}

StarCondition star_condition(const Instance& inst) {
  const int n = inst.n();
  StarCondition out;
  out.margin = inst.p(n - 1) * inst.p(n - 1) - inst.p(n) * inst.p(n - 2);
  out.holds = out.margin <= 0.0;
  return out;
}

StarSolution solve_star(const Instance& inst) {
  const int n = inst.n();
  const StarCondition cond = star_condition(inst);

  std::vector<double> x(static_cast<std::size_t>(n), 0.0);
  bool heuristic = false;
  double split_spread = 0.0;

  if (cond.holds) {
    // Cost depends on the peripheral shares only through their sum when the
    // central worker is safe, so the equal split is as good as any; take it
    // as the canonical representative.
    for (int i = 0; i < n - 1; ++i) {
      x[static_cast<std::size_t>(i)] = 1.0 / (n - 1);
    }
    double sum = 0.0;
    for (double v : x) sum += v;
    if (sum > 1.0) {  // n-1 rounded shares can overshoot 1 by an ulp
      x[0] -= sum - 1.0;
    }
    const double canonical_cost = star_cost_eval(inst, x);
    CounterRng rng(0x5741u, 0);  // fixed seed: diagnostics are reproducible
    for (int rep = 0; rep < 10; ++rep) {
      std::vector<double> split(static_cast<std::size_t>(n), 0.0);
      double sum = 0.0;
      for (int i = 0; i < n - 1; ++i) {
        split[static_cast<std::size_t>(i)] = 0.05 + rng.next_double();
        sum += split[static_cast<std::size_t>(i)];
      }
      for (int i = 0; i < n - 1; ++i) split[static_cast<std::size_t>(i)] /= sum;
      split_spread = std::max(
          split_spread, std::abs(star_cost_eval(inst, split) - canonical_cost));
    }
  } else {
    // The peripheral workers are interchangeable, so search over the common
    // peripheral share u and the central share v with (n-1)u + v <= 1.
    heuristic = true;
    const int cells = 200;
    double best_cost = std::numeric_limits<double>::infinity();
    double best_u = 0.0, best_v = 0.0;
    std::vector<double> probe(static_cast<std::size_t>(n), 0.0);
    auto eval_uv = [&](double u, double v) {
      for (int i = 0; i < n - 1; ++i) probe[static_cast<std::size_t>(i)] = u;
      probe[static_cast<std::size_t>(n - 1)] = v;
      return star_cost_eval(inst, probe);
    };
    const double u_max = 1.0 / (n - 1);
    for (int iu = 0; iu <= cells; ++iu) {
      const double u = u_max * iu / cells;
      const double v_cap = 1.0 - (n - 1) * u;
      if (v_cap < -1e-12) continue;
      for (int iv = 0; iv <= cells; ++iv) {
        const double v = v_cap * iv / cells;
        const double cost = eval_uv(u, std::min(v, 1.0));
        if (cost < best_cost) {
          best_cost = cost;
          best_u = u;
          best_v = std::min(v, 1.0);
        }
      }
    }
    // Golden polish, alternating the two coordinates.
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    auto golden_1d = [&](auto&& f, double a, double b) {
      double f1, f2;
      double m1 = b - gr * (b - a), m2 = a + gr * (b - a);
      f1 = f(m1);
      f2 = f(m2);
      while (b - a > 1e-10) {
        if (f1 <= f2) {
          b = m2; m2 = m1; f2 = f1;
          m1 = b - gr * (b - a);
          f1 = f(m1);
        } else {
          a = m1; m1 = m2; f1 = f2;
          m2 = a + gr * (b - a);
          f2 = f(m2);
        }
      }
      return 0.5 * (a + b);
    };
    for (int pass = 0; pass < 64; ++pass) {
      const double u_hi = std::min(u_max, (1.0 - best_v) / (n - 1));
      const double u_new =
          golden_1d([&](double u) { return eval_uv(u, best_v); }, 0.0, u_hi);
      if (eval_uv(u_new, best_v) < best_cost) {
        best_u = u_new;
        best_cost = eval_uv(best_u, best_v);
      }
      const double v_hi =
          std::min(1.0 - 1e-9, std::max(0.0, 1.0 - (n - 1) * best_u));
      const double v_new =
          golden_1d([&](double v) { return eval_uv(best_u, v); }, 0.0, v_hi);
      if (eval_uv(best_u, v_new) >= best_cost) break;
      best_v = v_new;
      best_cost = eval_uv(best_u, best_v);
    }
    for (int i = 0; i < n - 1; ++i) x[static_cast<std::size_t>(i)] = best_u;
    x[static_cast<std::size_t>(n - 1)] = best_v;
    // Guard against sub-ulp overshoot of the capacity before validating.
    double sum = (n - 1) * best_u + best_v;
    if (sum > 1.0 && sum < 1.0 + 1e-9) {
      x[static_cast<std::size_t>(n - 1)] -= sum - 1.0;
    }
  }

  ReplacementStrategy strategy = validate_strategy(std::move(x), 1.0);
  StarSolution sol{strategy,
                   star_wages(inst, strategy),
                   star_expected_cost(inst, strategy),
                   cond.holds,
                   cond.margin,
                   split_spread,
                   heuristic};
  return sol;
}

}  // namespace teamai
