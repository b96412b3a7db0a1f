#include "teamai/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "teamai/chain.hpp"
#include "teamai/optimizer.hpp"
#include "teamai/report.hpp"
#include "teamai/rng.hpp"
#include "teamai/sim.hpp"
#include "teamai/star.hpp"
#include "teamai/task.hpp"

namespace teamai {

namespace {

// ---------------------------------------------------------------------------
// Suite machinery

class Checker {
 public:
  void expect(bool ok, const std::function<std::string()>& describe) {
    ++checks_;
    if (!ok) {
      ++failures_;
      if (detail_.empty()) detail_ = describe();
    }
  }

  void expect(bool ok, const std::string& describe) {
    expect(ok, [&describe] { return describe; });
  }

  std::int64_t checks() const { return checks_; }
  std::int64_t failures() const { return failures_; }
  const std::string& detail() const { return detail_; }

 private:
  std::int64_t checks_ = 0;
  std::int64_t failures_ = 0;
  std::string detail_;
};

std::string fmt(double v) { return format_sig(v, 10); }

// ---------------------------------------------------------------------------
// Deterministic random instances

// Admissible random instance: strictly increasing success probabilities with
// strictly increasing increments, macroscopic gaps so that solver claims are
// tested away from degenerate corners.
Instance random_instance(CounterRng& rng, int n) {
  std::vector<double> inc(static_cast<std::size_t>(n));
  inc[0] = 0.3 + 0.7 * rng.next_double();
  for (int k = 1; k < n; ++k) {
    inc[static_cast<std::size_t>(k)] =
        inc[static_cast<std::size_t>(k - 1)] * (1.07 + 0.5 * rng.next_double());
  }
  double inc_sum = 0.0;
  for (double d : inc) inc_sum += d;

  const double p0 = 0.02 + 0.2 * rng.next_double();
  const double pn = 0.6 + 0.39 * rng.next_double();
  const double scale = (pn - p0) / inc_sum;

  std::vector<double> p(static_cast<std::size_t>(n) + 1);
  p[0] = p0;
  for (int k = 0; k < n; ++k) {
    p[static_cast<std::size_t>(k) + 1] =
        p[static_cast<std::size_t>(k)] + scale * inc[static_cast<std::size_t>(k)];
  }
  const double c = 0.5 + rng.next_double();
  return validate_instance(n, c, std::move(p));
}

Instance random_instance_n3_margin_clear(CounterRng& rng) {
  for (;;) {
    Instance inst = random_instance(rng, 3);
    const double margin = inst.p(1) * inst.p(1) - inst.p(3) * inst.p(0);
    if (std::abs(margin) >= 1e-9) return inst;
  }
}

// Interior strategy with coordinates bounded away from 1 and sum strictly
// below capacity.
std::vector<double> random_interior_point(CounterRng& rng, int n,
                                          double max_total = 0.9) {
  std::vector<double> x(static_cast<std::size_t>(n));
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    x[static_cast<std::size_t>(i)] = rng.next_double();
    sum += x[static_cast<std::size_t>(i)];
  }
  const double target = max_total * rng.next_double();
  for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] *= target / sum;
  return x;
}

std::string describe_instance(const Instance& inst) {
  std::ostringstream os;
  os << "instance p=(";
  for (int k = 0; k <= inst.n(); ++k) {
    if (k) os << ", ";
    os << fmt(inst.p(k));
  }
  os << "), c=" << fmt(inst.c());
  return os.str();
}

// ---------------------------------------------------------------------------
// Suite 1: closed form vs numerical solver

void suite_closedform(Checker& ck, std::uint64_t) {
  for (int ai = 1; ai <= 9; ++ai) {
    const double alpha = 0.1 * ai;
    const auto t0 = std::chrono::steady_clock::now();
    const Optimum closed = solve_oring(alpha, 1.0);
    const Instance inst = oring_instance(alpha, 3, 1.0);
    const Optimum numeric = solve_chain_n3(inst);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();

    for (int i = 0; i < 3; ++i) {
      const double diff = std::abs(numeric.strategy.x(i) - closed.strategy.x(i));
      ck.expect(diff <= 1e-4, [&] {
        return "alpha=" + fmt(alpha) + ": x[" + std::to_string(i + 1) +
               "] differs from the closed form by " + fmt(diff);
      });
    }
    ck.expect(std::abs(numeric.cost.total - closed.cost.total) <= 1e-6, [&] {
      return "alpha=" + fmt(alpha) + ": cost differs by " +
             fmt(numeric.cost.total - closed.cost.total);
    });

    const WageSchedule at_closed = optimal_wages(inst, closed.strategy);
    const double w_ref[3] = {1.0 / (1.0 - alpha * alpha),
                             1.0 / ((1.0 - alpha) * std::sqrt(1.0 + alpha)),
                             1.0 / (1.0 - alpha)};
    for (int i = 0; i < 3; ++i) {
      ck.expect(std::abs(at_closed.value(i) - w_ref[i]) <= 1e-12, [&] {
        return "alpha=" + fmt(alpha) + ": wage " + std::to_string(i + 1) +
               " misses the closed form by " +
               fmt(at_closed.value(i) - w_ref[i]);
      });
    }
    ck.expect(elapsed < 1.0, [&] {
      return "alpha=" + fmt(alpha) + ": solve took " + fmt(elapsed) + "s";
    });
  }
}

// ---------------------------------------------------------------------------
// Suite 2: wage-gap ratio

void suite_gapratio(Checker& ck, std::uint64_t) {
  for (int ai = 1; ai <= 9; ++ai) {
    const double alpha = 0.1 * ai;
    const Instance inst = oring_instance(alpha, 3, 1.0);
    const Optimum opt = solve_oring(alpha, 1.0);
    const GapReport gap = wage_gap_report(inst, opt.strategy);
    const double ratio_ref = 1.0 - alpha / ((1.0 + alpha) * (1.0 + alpha));
    ck.expect(std::abs(gap.ratio - ratio_ref) <= 1e-9, [&] {
      return "alpha=" + fmt(alpha) + ": gap ratio " + fmt(gap.ratio) +
             " vs analytic " + fmt(ratio_ref);
    });
    if (ai == 5) {
      ck.expect(std::abs(gap.gap_no_ai - 0.857143) <= 5e-7,
                "alpha=0.5: gap without AI is not 0.857143");
      ck.expect(std::abs(gap.gap_at_x - 0.666667) <= 5e-7,
                "alpha=0.5: gap at the optimum is not 0.666667");
      ck.expect(std::abs(gap.ratio - 0.777778) <= 5e-7,
                "alpha=0.5: gap ratio is not 0.777778");
    }
  }
}

// ---------------------------------------------------------------------------
// Suite 3: two-sided mixture family is strictly convex with equal endpoints

void suite_mixing(Checker& ck, std::uint64_t seed) {
  CounterRng rng(seed, 0x304);
  for (int rep = 0; rep < 100; ++rep) {
    const int n = 3 + rep % 3;
    const Instance inst = random_instance(rng, n);

    std::vector<double> w(101);
    for (int k = 0; k <= 100; ++k) w[static_cast<std::size_t>(k)] =
        family_cost(inst, k / 100.0);

    bool convex = true;
    double worst = 1.0;
    for (int k = 1; k < 100; ++k) {
      const double second = w[static_cast<std::size_t>(k) + 1] -
                            2.0 * w[static_cast<std::size_t>(k)] +
                            w[static_cast<std::size_t>(k) - 1];
      worst = std::min(worst, second);
      if (!(second > 0.0)) convex = false;
    }
    ck.expect(convex, [&] {
      return describe_instance(inst) + ": second difference " + fmt(worst);
    });

    ck.expect(std::abs(w.front() - w.back()) <= 1e-12, [&] {
      return describe_instance(inst) + ": endpoint costs differ by " +
             fmt(w.front() - w.back());
    });

    const double interior_min = *std::min_element(w.begin() + 1, w.end() - 1);
    ck.expect(interior_min < w.front() && interior_min < w.back(), [&] {
      return describe_instance(inst) + ": interior minimum " +
             fmt(interior_min) + " does not beat the endpoints";
    });

    // The closed family expression must agree with the general evaluator.
    const double rho = rng.next_double();
    std::vector<double> x(static_cast<std::size_t>(n), 0.0);
    x[0] = rho;
    x[static_cast<std::size_t>(n - 1)] = 1.0 - rho;
    const double direct =
        expected_cost(inst, validate_strategy(x, 1.0)).total;
    ck.expect(std::abs(direct - family_cost(inst, rho)) <= 1e-12, [&] {
      return describe_instance(inst) + ": family cost at rho=" + fmt(rho) +
             " differs from the general evaluator by " +
             fmt(direct - family_cost(inst, rho));
    });
  }
}

// ---------------------------------------------------------------------------
// Suite 4: pure-strategy costs

void suite_purecosts(Checker& ck, std::uint64_t seed) {
  CounterRng rng(seed, 0x404);
  for (int rep = 0; rep < 100; ++rep) {
    const int n = 3 + rep % 3;
    const Instance inst = random_instance(rng, n);
    const PureStrategyCosts costs = pure_strategy_costs(inst);
    const double w1 = costs.replace_worker.front();
    const double wn = costs.replace_worker.back();
    ck.expect(std::abs(w1 - wn) <= 1e-12 * std::max(1.0, std::abs(w1)), [&] {
      return describe_instance(inst) + ": front and end costs differ by " +
             fmt(w1 - wn);
    });
    bool cheapest = w1 <= costs.none + 1e-12;
    for (double other : costs.replace_worker) cheapest &= w1 <= other + 1e-12;
    ck.expect(cheapest, [&] {
      return describe_instance(inst) + ": the two end replacements are not cheapest";
    });
  }

  // With p_0 = 0 the front-most worker needs no rent, so replacing him costs
  // exactly as much as replacing nobody.
  for (int rep = 0; rep < 10; ++rep) {
    const int n = 3 + rep % 3;
    std::vector<double> p(static_cast<std::size_t>(n) + 1, 0.0);
    double inc = 0.05 + 0.1 * rng.next_double();
    for (int k = 1; k <= n; ++k) {
      p[static_cast<std::size_t>(k)] = p[static_cast<std::size_t>(k) - 1] + inc;
      inc *= 1.1 + 0.4 * rng.next_double();
    }
    const double scale = (0.7 + 0.29 * rng.next_double()) /
                         p[static_cast<std::size_t>(n)];
    for (double& v : p) v *= scale;
    const Instance inst = validate_instance(n, 1.0, p);
    const PureStrategyCosts costs = pure_strategy_costs(inst);
    ck.expect(costs.replace_worker.front() == costs.none, [&] {
      return describe_instance(inst) +
             ": replacing the front-most is not bit-identical to replacing nobody";
    });
  }
}

// ---------------------------------------------------------------------------
// Suite 5: optimal-structure properties of the n=3 solver

void suite_structure(Checker& ck, std::uint64_t seed) {
  CounterRng rng(seed, 0x505);
  for (int rep = 0; rep < 200; ++rep) {
    const Instance inst = random_instance_n3_margin_clear(rng);
    const Optimum opt = solve_chain_n3(inst);
    const double x1 = opt.strategy.x(0);
    const double x2 = opt.strategy.x(1);
    const double x3 = opt.strategy.x(2);

    ck.expect(x2 <= 1e-6, [&] {
      return describe_instance(inst) + ": middle replaced with " + fmt(x2);
    });
    ck.expect(x3 >= x1 - 1e-6, [&] {
      return describe_instance(inst) + ": x3=" + fmt(x3) + " < x1=" + fmt(x1);
    });
    ck.expect(x3 >= 1e-4, [&] {
      return describe_instance(inst) + ": end-most share " + fmt(x3);
    });
    ck.expect(x1 < 1.0 - 1e-6 && x2 < 1.0 - 1e-6 && x3 < 1.0 - 1e-6, [&] {
      return describe_instance(inst) + ": some worker replaced almost surely";
    });

    const double margin = inst.p(1) * inst.p(1) - inst.p(3) * inst.p(0);
    const bool under = opt.utilization < 1.0 - 1e-4;
    ck.expect(under == (margin > 1e-9), [&] {
      return describe_instance(inst) + ": utilization " +
             fmt(opt.utilization) + " vs margin " + fmt(margin);
    });

    ck.expect(opt.cost.total <= pure_strategy_costs(inst).min_cost() + 1e-9, [&] {
      return describe_instance(inst) + ": solver lost to a pure strategy";
    });
  }

  // Hand-built references: one interior (underutilized) and one capacity-bound.
  {
    const Instance inst = validate_instance(3, 1.0, {0.01, 0.2, 0.45, 0.75});
    const Optimum opt = solve_chain_n3(inst);
    ck.expect(std::abs(opt.strategy.x(0) - 0.0) <= 1e-3 &&
                  std::abs(opt.strategy.x(1) - 0.0) <= 1e-3 &&
                  std::abs(opt.strategy.x(2) - 0.5785) <= 1e-3,
              "p=(0.01,0.2,0.45,0.75): optimum is not (0, 0, 0.5785) +- 1e-3, got x=(" +
                  fmt(opt.strategy.x(0)) + ", " + fmt(opt.strategy.x(1)) +
                  ", " + fmt(opt.strategy.x(2)) + ")");
    ck.expect(opt.utilization < 1.0 - 1e-4,
              "p=(0.01,0.2,0.45,0.75): capacity should be left unused");
  }
  {
    const Instance inst = validate_instance(3, 1.0, {0.05, 0.15, 0.30, 0.60});
    const Optimum opt = solve_chain_n3(inst);
    ck.expect(opt.utilization >= 1.0 - 1e-4,
              "p=(0.05,0.15,0.30,0.60): capacity should be exhausted, used " +
                  fmt(opt.utilization));
  }
}

// ---------------------------------------------------------------------------
// Suite 6: wage order and wage movement at the optimum

void suite_wageorder(Checker& ck, std::uint64_t seed) {
  CounterRng rng(seed, 0x505);  // same stream as the structure suite
  for (int rep = 0; rep < 200; ++rep) {
    const Instance inst = random_instance_n3_margin_clear(rng);
    const Optimum opt = solve_chain_n3(inst);
    const WageSchedule base = optimal_wages(inst, no_replacement(3));
    const double w1 = opt.wages.value(0);
    const double w2 = opt.wages.value(1);
    const double w3 = opt.wages.value(2);
    ck.expect(w3 > w2 && w2 > w1, [&] {
      return describe_instance(inst) + ": wage order broken (" + fmt(w1) +
             ", " + fmt(w2) + ", " + fmt(w3) + ")";
    });
    ck.expect(w1 > base.value(0) && w2 > base.value(1), [&] {
      return describe_instance(inst) +
             ": front or middle wage failed to rise above the no-AI level";
    });
    ck.expect(std::abs(w3 - base.value(2)) <= 1e-12, [&] {
      return describe_instance(inst) + ": end-most wage moved by " +
             fmt(w3 - base.value(2));
    });
  }
}

// ---------------------------------------------------------------------------
// Suite 7: equilibrium verification and the off-path inequality

void suite_equilibrium(Checker& ck, std::uint64_t seed) {
  CounterRng rng(seed, 0x505);  // same instances as the structure suite
  for (int rep = 0; rep < 200; ++rep) {
    const Instance inst = random_instance_n3_margin_clear(rng);
    const Optimum opt = solve_chain_n3(inst);
    const EquilibriumReport rep_eq =
        verify_trigger_equilibrium(inst, opt.strategy, opt.wages, 1e-9);
    ck.expect(rep_eq.pass, [&] {
      return describe_instance(inst) + ": trigger equilibrium check failed";
    });
  }

  // Every worker's temptation to shirk grows by at most the top production
  // increment when he sees a predecessor shirk first.
  CounterRng rng2(seed, 0x707);
  for (int rep = 0; rep < 1000; ++rep) {
    const int n = 3 + rep % 3;
    const Instance inst = random_instance(rng2, n);
    const ReplacementStrategy x =
        validate_strategy(random_interior_point(rng2, n), 1.0);
    const double cap = inst.p(n) - inst.p(n - 1);
    for (int i = 1; i < n; ++i) {
      const double gap = shirk_success_rate(inst, x, i) -
                         offpath_shirk_rate(inst, x, i);
      ck.expect(gap <= cap + 1e-12, [&] {
        return describe_instance(inst) + ": worker " + std::to_string(i + 1) +
               " off-path gap " + fmt(gap) + " above the cap " + fmt(cap);
      });
    }
  }
}

// ---------------------------------------------------------------------------
// Suite 8: Monte Carlo cross-validation

void suite_montecarlo(Checker& ck, std::uint64_t) {
  const std::int64_t trials = 100000;
  const std::uint64_t mc_seed = 42;
  const auto close3 = [](const Estimate& e, double ref) {
    return std::abs(e.mean - ref) <= 3.0 * e.std_error + 1e-12;
  };
  const auto same = [](const Estimate& a, const Estimate& b) {
    return a.mean == b.mean && a.std_error == b.std_error;
  };

  {  // power-law optimum
    const Instance inst = oring_instance(0.5, 3, 1.0);
    const Optimum opt = solve_oring(0.5, 1.0);
    const WageSchedule w = optimal_wages(inst, opt.strategy);
    const SimReport rep = monte_carlo(inst, opt.strategy, w, trials, mc_seed);
    ck.expect(close3(rep.success_rate, inst.p(3)),
              "power-law optimum: success rate off by more than 3 SE");
    ck.expect(close3(rep.mean_cost, expected_cost(inst, opt.strategy).total),
              "power-law optimum: mean cost " + fmt(rep.mean_cost.mean) +
                  " off the analytic " +
                  fmt(expected_cost(inst, opt.strategy).total));
    for (int i = 0; i < 3; ++i) {
      const double ref =
          (1.0 - opt.strategy.x(i)) * (inst.p(3) * w.value(i) - 1.0);
      ck.expect(close3(rep.mean_payoffs[static_cast<std::size_t>(i)], ref),
                "power-law optimum: payoff " + std::to_string(i + 1) +
                    " off by more than 3 SE");
    }
    const SimReport again = monte_carlo(inst, opt.strategy, w, trials, mc_seed);
    ck.expect(same(rep.success_rate, again.success_rate) &&
                  same(rep.mean_cost, again.mean_cost),
              "power-law optimum: replay with the same seed is not bitwise equal");
  }

  {  // explicit instance at the no-AI benchmark
    const Instance inst = validate_instance(3, 1.0, {0.05, 0.15, 0.30, 0.60});
    const ReplacementStrategy x = no_replacement(3);
    const WageSchedule w = optimal_wages(inst, x);
    const SimReport rep = monte_carlo(inst, x, w, trials, mc_seed);
    ck.expect(close3(rep.success_rate, 0.60),
              "no-AI benchmark: success rate " + fmt(rep.success_rate.mean) +
                  " off 0.60 by more than 3 SE");
    ck.expect(close3(rep.mean_cost, expected_cost(inst, x).total),
              "no-AI benchmark: mean cost off by more than 3 SE");
    const SimReport again = monte_carlo(inst, x, w, trials, mc_seed);
    ck.expect(same(rep.mean_cost, again.mean_cost),
              "no-AI benchmark: replay is not bitwise equal");
  }

  {  // forced deviation: conditional success rates estimate both shirk rates
    const Instance inst = validate_instance(3, 1.0, {0.05, 0.15, 0.30, 0.60});
    const ReplacementStrategy x = validate_strategy({0.0, 0.0, 0.5}, 1.0);
    const WageSchedule w = optimal_wages(inst, x);
    const SimReport rep = monte_carlo(inst, x, w, trials, mc_seed, 1);
    const double zeta_ref = shirk_success_rate(inst, x, 1);  // 0.225
    ck.expect(close3(rep.deviant_human_success, zeta_ref),
              "deviation test: conditional success " +
                  fmt(rep.deviant_human_success.mean) + " vs analytic " +
                  fmt(zeta_ref));
    const double zhat_ref = offpath_shirk_rate(inst, x, 2);
    ck.expect(close3(rep.pair_human_success, zhat_ref),
              "deviation test: pair-conditional success " +
                  fmt(rep.pair_human_success.mean) + " vs analytic " +
                  fmt(zhat_ref));
    const SimReport again = monte_carlo(inst, x, w, trials, mc_seed, 1);
    ck.expect(same(rep.deviant_human_success, again.deviant_human_success),
              "deviation test: replay is not bitwise equal");
  }
}

// ---------------------------------------------------------------------------
// Suite 9: task-level substitution model

void suite_task(Checker& ck, std::uint64_t seed) {
  CounterRng rng(seed, 0x909);

  // Total compensation is invariant to the worker's own task share.
  for (int rep = 0; rep < 50; ++rep) {
    const int n = 3 + rep % 3;
    const Instance inst = random_instance(rng, n);
    std::vector<double> base = random_interior_point(rng, n, 0.8);
    const int i = static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(n));
    base[static_cast<std::size_t>(i)] = 0.0;
    const TaskStrategy ref{base, static_cast<double>(n)};
    const double ref_comp = task_wages(inst, ref).value(i);
    for (double xi : {0.15, 0.35, 0.55, 0.75, 0.95}) {
      std::vector<double> probe = base;
      probe[static_cast<std::size_t>(i)] = xi;
      const TaskStrategy ts{probe, static_cast<double>(n)};
      const double comp = (1.0 - xi) * task_wages(inst, ts).value(i);
      ck.expect(std::abs(comp - ref_comp) <= 1e-10, [&] {
        return describe_instance(inst) + ": worker " + std::to_string(i + 1) +
               " total compensation moved by " + fmt(comp - ref_comp) +
               " at share " + fmt(xi);
      });
    }
  }

  // Interior gradients are positive: fractional substitution never pays.
  for (int rep = 0; rep < 100; ++rep) {
    const int n = 3 + rep % 3;
    const Instance inst = random_instance(rng, n);
    const TaskStrategy ts{random_interior_point(rng, n, 0.9),
                          static_cast<double>(n)};
    const TaskGradientReport grad = interior_gradient_check(inst, ts);
    ck.expect(grad.all_positive, [&] {
      return describe_instance(inst) + ": some interior partial is not positive";
    });
  }

  // The solver agrees with brute force over all 0/1 strategies.
  for (int rep = 0; rep < 20; ++rep) {
    const Instance inst = random_instance(rng, 3);
    const double capacity = 1.0 + 2.0 * rng.next_double();
    const Optimum opt = solve_task_based(inst, capacity);
    for (int i = 0; i < 3; ++i) {
      const double xi = opt.strategy.x(i);
      ck.expect(xi == 0.0 || xi == 1.0, [&] {
        return describe_instance(inst) + ": fractional component " + fmt(xi);
      });
    }
    double brute = std::numeric_limits<double>::infinity();
    for (int mask = 0; mask < 8; ++mask) {
      std::vector<double> x(3, 0.0);
      int ones = 0;
      for (int i = 0; i < 3; ++i) {
        if (mask & (1 << i)) {
          x[static_cast<std::size_t>(i)] = 1.0;
          ++ones;
        }
      }
      if (ones > static_cast<int>(std::floor(capacity))) continue;
      brute = std::min(brute,
                       task_expected_cost(inst, TaskStrategy{x, capacity}).total);
    }
    ck.expect(std::abs(opt.cost.total - brute) <= 1e-12, [&] {
      return describe_instance(inst) + ": solver cost " + fmt(opt.cost.total) +
             " vs brute force " + fmt(brute) + " at capacity " + fmt(capacity);
    });
  }

  // Pinned references on the power-law instance.
  const Instance oring = oring_instance(0.5, 3, 1.0);
  {
    const Optimum opt = solve_task_based(oring, 0.8);
    ck.expect(opt.strategy.total() == 0.0,
              "capacity 0.8: expected no replacement, got total " +
                  fmt(opt.strategy.total()));
  }
  {
    const Optimum opt = solve_task_based(oring, 1.0);
    const double w1 = pure_strategy_costs(oring).replace_worker.front();
    ck.expect(std::abs(opt.cost.total - w1) <= 1e-12,
              "capacity 1: cost " + fmt(opt.cost.total) +
                  " differs from the pure front replacement " + fmt(w1));
  }
  {
    const Optimum opt = solve_task_based(oring, 2.0);
    ck.expect(std::abs(opt.cost.total - 4.0) <= 1e-12,
              "capacity 2: cost " + fmt(opt.cost.total) + " is not 4.0");
  }
}

// ---------------------------------------------------------------------------
// Suite 10: star topology

void suite_star(Checker& ck, std::uint64_t seed) {
  for (double alpha : {0.3, 0.5, 0.7}) {
    for (int n : {3, 4, 5}) {
      const Instance inst = oring_instance(alpha, n, 1.0);
      const StarCondition cond = star_condition(inst);
      ck.expect(cond.margin == 0.0,
                "power-law alpha=" + fmt(alpha) + " n=" + std::to_string(n) +
                    ": margin " + fmt(cond.margin) + " is not exactly 0");
      ck.expect(cond.holds, "power-law condition unexpectedly fails");
    }
  }

  const Instance inst = oring_instance(0.5, 3, 1.0);
  const StarSolution sol = solve_star(inst);
  ck.expect(sol.canonical, "alpha=0.5: expected the canonical equal split");
  ck.expect(sol.split_spread <= 1e-12,
            "alpha=0.5: cost spread across random splits is " +
                fmt(sol.split_spread));
  ck.expect(std::abs(sol.cost.total - 4.333333) <= 5e-7,
            "alpha=0.5: canonical cost " + fmt(sol.cost.total) +
                " is not 4.333333");

  CounterRng rng(seed, 0xA0A);
  for (int rep = 0; rep < 500; ++rep) {
    const ReplacementStrategy x =
        validate_strategy(random_interior_point(rng, 3, 1.0), 1.0);
    const double cost = star_expected_cost(inst, x).total;
    ck.expect(cost >= sol.cost.total - 1e-12, [&] {
      return "alpha=0.5: random feasible strategy beats the canonical by " +
             fmt(sol.cost.total - cost);
    });
  }
}

// ---------------------------------------------------------------------------
// Suite 11: trigger-programmed AI

void suite_strategic(Checker& ck, std::uint64_t seed) {
  CounterRng rng(seed, 0xB0B);
  for (int rep = 0; rep < 100; ++rep) {
    const int n = 3 + rep % 3;
    const Instance inst = random_instance(rng, n);
    const Optimum opt = solve_strategic(inst);
    bool endmost = opt.strategy.x(n - 1) == 1.0;
    for (int i = 0; i + 1 < n; ++i) endmost &= opt.strategy.x(i) == 0.0;
    ck.expect(endmost, [&] {
      return describe_instance(inst) + ": optimum is not the pure end replacement";
    });
  }

  const Optimum opt = solve_strategic(oring_instance(0.5, 3, 1.0));
  ck.expect(std::abs(opt.cost.total - 3.476190) <= 1e-6,
            "alpha=0.5: scripted-AI cost " + fmt(opt.cost.total) +
                " is not 3.476190");
  const double benchmark = solve_oring(0.5, 1.0).cost.total;
  ck.expect(opt.cost.total < benchmark,
            "alpha=0.5: scripted-AI cost does not beat the benchmark optimum");
}

// ---------------------------------------------------------------------------
// Suite 12: payoff analysis over the alpha sweep

void suite_payoffs(Checker& ck, std::uint64_t) {
  for (int s = 0; s <= 80; ++s) {
    const double alpha = 0.1 + 0.01 * s;
    const Instance inst = oring_instance(alpha, 3, 1.0);
    const Optimum opt = solve_oring(alpha, 1.0);
    const PayoffReport pay = payoff_report(inst, opt.strategy);
    ck.expect(pay.payoffs[1] > pay.payoffs[2] && pay.payoffs[2] > pay.payoffs[0],
              "alpha=" + fmt(alpha) + ": payoff order is not middle > end > front");
    ck.expect(pay.deltas[2] < 0.0,
              "alpha=" + fmt(alpha) + ": end-most payoff did not fall");
    const double spread_with_ai = pay.payoffs[1] - pay.payoffs[0];
    const double spread_without = pay.baseline[2] - pay.baseline[0];
    ck.expect(spread_with_ai < spread_without,
              "alpha=" + fmt(alpha) + ": payoff spread did not shrink");
  }

  // Locate the sign change of the front-most payoff delta by bisection and
  // compare it with the cubic-root threshold.
  auto delta1 = [](double alpha) {
    const Instance inst = oring_instance(alpha, 3, 1.0);
    const Optimum opt = solve_oring(alpha, 1.0);
    const PayoffReport pay = payoff_report(inst, opt.strategy);
    return pay.deltas[0];
  };
  double lo = 0.6, hi = 0.9;
  ck.expect(delta1(lo) > 0.0 && delta1(hi) < 0.0,
            "front-most payoff delta does not change sign on [0.6, 0.9]");
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    (delta1(mid) > 0.0 ? lo : hi) = mid;
  }
  const double found = 0.5 * (lo + hi);
  ck.expect(std::abs(found - 0.754878) <= 1e-3,
            "sign change located at " + fmt(found) + ", expected 0.754878 +- 1e-3");
  ck.expect(std::abs(found - front_payoff_alpha_threshold()) <= 1e-6,
            "bisection result " + fmt(found) +
                " disagrees with the cubic-root threshold " +
                fmt(front_payoff_alpha_threshold()));
}

// ---------------------------------------------------------------------------

struct SuiteSpec {
  std::string name;
  std::string title;
  void (*run)(Checker&, std::uint64_t);
};

const std::vector<SuiteSpec>& suite_specs() {
  static const std::vector<SuiteSpec> specs = {
      {"closedform",
       "numerical n=3 optimum matches the power-law closed form", suite_closedform},
      {"gapratio", "wage-gap ratio equals 1 - alpha/(1+alpha)^2", suite_gapratio},
      {"mixing",
       "two-sided mixtures are strictly convex and beat pure strategies",
       suite_mixing},
      {"purecosts",
       "front and end pure replacements tie and are cheapest", suite_purecosts},
      {"structure",
       "n=3 optima spare the middle, favor the end, and match the "
       "underutilization margin",
       suite_structure},
      {"wageorder",
       "optimal replacement preserves the wage hierarchy and only raises "
       "front/middle wages",
       suite_wageorder},
      {"equilibrium",
       "trigger profile verifies on- and off-path at the solved optimum",
       suite_equilibrium},
      {"montecarlo",
       "seeded simulation reproduces analytic rates, costs, and shirk rates",
       suite_montecarlo},
      {"task", "task-level substitution: invariance, positive gradients, 0/1 optima",
       suite_task},
      {"star", "star network: margin, split indifference, canonical optimum",
       suite_star},
      {"strategic", "trigger-programmed AI replaces the end-most worker",
       suite_strategic},
      {"payoffs",
       "payoff ordering, spread reduction, and the front-most sign change",
       suite_payoffs},
  };
  return specs;
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& spec : suite_specs()) out.push_back(spec.name);
    return out;
  }();
  return names;
}

SuiteResult run_verify_suite(const std::string& name, std::uint64_t seed) {
  for (const auto& spec : suite_specs()) {
    if (spec.name != name) continue;
    Checker ck;
    const auto t0 = std::chrono::steady_clock::now();
    spec.run(ck, seed);
    SuiteResult res;
    res.name = spec.name;
    res.title = spec.title;
    res.checks = ck.checks();
    res.failures = ck.failures();
    res.pass = ck.failures() == 0;
    res.detail = res.pass ? std::to_string(ck.checks()) + " checks"
                          : ck.detail();
    res.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return res;
  }
  fail(Errc::UnknownSuite, "no suite named '" + name + "'; expected one of " +
                               [] {
                                 std::string all;
                                 for (const auto& n : verify_suite_names()) {
                                   if (!all.empty()) all += "|";
                                   all += n;
                                 }
                                 return all;
                               }());
}

std::vector<SuiteResult> run_all_verify_suites(std::uint64_t seed) {
  std::vector<SuiteResult> out;
  for (const auto& name : verify_suite_names()) {
    out.push_back(run_verify_suite(name, seed));
  }
  return out;
}

}  // namespace teamai
