#include "teamai/sim.hpp"

#include <algorithm>
#include <cmath>

#include "teamai/parallel.hpp"

namespace teamai {

namespace {

bool contains(const std::vector<int>& set, int value) {
  return std::find(set.begin(), set.end(), value) != set.end();
}

Estimate estimate_from_sums(double sum, double sum_sq, std::int64_t count) {
  Estimate e;
  if (count <= 0) return e;
  e.mean = sum / static_cast<double>(count);
  if (count > 1) {
    const double var =
        std::max(0.0, (sum_sq - sum * e.mean) / static_cast<double>(count - 1));
    e.std_error = std::sqrt(var / static_cast<double>(count));
  }
  return e;
}

}  // namespace

std::vector<int> domino_trace(const Instance& inst,
                              const std::vector<int>& replaced_set,
                              std::optional<int> first_shirker) {
  const int n = inst.n();
  std::vector<int> efforts(static_cast<std::size_t>(n), 1);
  if (!first_shirker) return efforts;
  const int s = *first_shirker;
  if (s < 0 || s >= n) {
    fail(Errc::OutOfRange, "deviant position " + std::to_string(s));
  }
  if (contains(replaced_set, s)) return efforts;  // an AI never deviates
  efforts[static_cast<std::size_t>(s)] = 0;
  for (int j = s + 1; j < n; ++j) {
    if (contains(replaced_set, j)) break;  // AI contributes; cascade stops
    efforts[static_cast<std::size_t>(j)] = 0;
  }
  return efforts;
}

Trace play_once(const Instance& inst, const ReplacementStrategy& x,
                const WageSchedule& w, std::optional<int> forced_deviant,
                CounterRng& rng) {
  const int n = inst.n();
  if (x.size() != n || w.size() != n) {
    fail(Errc::BadLength, "strategy/wages sized for a different team");
  }
  for (int i = 0; i < n; ++i) {
    const bool should_have_wage = x.x(i) < 1.0;
    if (w.present(i) != should_have_wage) {
      fail(Errc::InconsistentWages,
           "wage presence must match x_i < 1 at worker " + std::to_string(i + 1));
    }
  }

  Trace tr;
  const int drawn = rng.categorical_or_rest(x.x());
  tr.replaced = drawn < n ? drawn : -1;
  std::vector<int> replaced_set;
  if (tr.replaced >= 0) replaced_set.push_back(tr.replaced);

  tr.efforts = domino_trace(inst, replaced_set, forced_deviant);

  tr.signals.resize(static_cast<std::size_t>(n), 1);
  int contributions = 0;
  for (int i = 0; i < n; ++i) {
    const bool contributed = (i == tr.replaced) || tr.efforts[static_cast<std::size_t>(i)] == 1;
    contributions += contributed ? 1 : 0;
    if (i + 1 < n) tr.signals[static_cast<std::size_t>(i) + 1] = contributed ? 1 : 0;
  }

  tr.success = rng.bernoulli(inst.p(contributions));

  tr.worker_payoffs.resize(static_cast<std::size_t>(n), 0.0);
  tr.principal_cost = tr.replaced >= 0 ? inst.c() : 0.0;
  for (int i = 0; i < n; ++i) {
    if (i == tr.replaced) continue;
    const double wage = tr.success ? w.value(i) : 0.0;
    tr.principal_cost += wage;
    tr.worker_payoffs[static_cast<std::size_t>(i)] =
        wage - inst.c() * tr.efforts[static_cast<std::size_t>(i)];
  }
  return tr;
}

SimReport monte_carlo(const Instance& inst, const ReplacementStrategy& x,
                      const WageSchedule& w, std::int64_t trials,
                      std::uint64_t seed, std::optional<int> deviant) {
  if (trials < 1) fail(Errc::OutOfRange, "trials must be at least 1");
  const int n = inst.n();
  if (deviant && (*deviant < 0 || *deviant >= n)) {
    fail(Errc::OutOfRange, "deviant position " + std::to_string(*deviant));
  }

  struct Partial {
    double success = 0.0;
    double cost = 0.0, cost_sq = 0.0;
    std::vector<double> payoff, payoff_sq;
    std::int64_t dev_human = 0;
    double dev_success = 0.0;
    std::int64_t pair_human = 0;
    double pair_success = 0.0;
  };

  const std::int64_t chunk = 4096;  // fixed: reduction order independent of threads
  const std::int64_t chunks = (trials + chunk - 1) / chunk;
  std::vector<Partial> partials(static_cast<std::size_t>(chunks));
  for (auto& p : partials) {
    p.payoff.assign(static_cast<std::size_t>(n), 0.0);
    p.payoff_sq.assign(static_cast<std::size_t>(n), 0.0);
  }

  parallel_chunks(trials, chunk, [&](std::int64_t ci, std::int64_t begin,
                                     std::int64_t end) {
    Partial& part = partials[static_cast<std::size_t>(ci)];
    for (std::int64_t t = begin; t < end; ++t) {
      CounterRng rng(seed, static_cast<std::uint64_t>(t));
      const Trace tr = play_once(inst, x, w, deviant, rng);
      part.success += tr.success ? 1.0 : 0.0;
      part.cost += tr.principal_cost;
      part.cost_sq += tr.principal_cost * tr.principal_cost;
      for (int i = 0; i < n; ++i) {
        const double v = tr.worker_payoffs[static_cast<std::size_t>(i)];
        part.payoff[static_cast<std::size_t>(i)] += v;
        part.payoff_sq[static_cast<std::size_t>(i)] += v * v;
      }
      if (deviant) {
        const int d = *deviant;
        if (tr.replaced != d) {
          part.dev_human += 1;
          part.dev_success += tr.success ? 1.0 : 0.0;
          if (d + 1 < n && tr.replaced != d + 1) {
            part.pair_human += 1;
            part.pair_success += tr.success ? 1.0 : 0.0;
          }
        }
      }
    }
  });

  Partial sum;
  sum.payoff.assign(static_cast<std::size_t>(n), 0.0);
  sum.payoff_sq.assign(static_cast<std::size_t>(n), 0.0);
  for (const auto& part : partials) {
    sum.success += part.success;
    sum.cost += part.cost;
    sum.cost_sq += part.cost_sq;
    for (int i = 0; i < n; ++i) {
      sum.payoff[static_cast<std::size_t>(i)] += part.payoff[static_cast<std::size_t>(i)];
      sum.payoff_sq[static_cast<std::size_t>(i)] += part.payoff_sq[static_cast<std::size_t>(i)];
    }
    sum.dev_human += part.dev_human;
    sum.dev_success += part.dev_success;
    sum.pair_human += part.pair_human;
    sum.pair_success += part.pair_success;
  }

  SimReport report;
  report.trials = trials;
  report.seed = seed;
  report.deviant = deviant ? *deviant : -1;
  report.success_rate = estimate_from_sums(sum.success, sum.success, trials);
  report.mean_cost = estimate_from_sums(sum.cost, sum.cost_sq, trials);
  report.mean_payoffs.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    report.mean_payoffs[static_cast<std::size_t>(i)] = estimate_from_sums(
        sum.payoff[static_cast<std::size_t>(i)],
        sum.payoff_sq[static_cast<std::size_t>(i)], trials);
  }
  if (deviant) {
    report.deviant_human_trials = sum.dev_human;
    report.deviant_human_success =
        estimate_from_sums(sum.dev_success, sum.dev_success, sum.dev_human);
    report.pair_human_trials = sum.pair_human;
    report.pair_human_success =
        estimate_from_sums(sum.pair_success, sum.pair_success, sum.pair_human);
  }
  return report;
}

}  // namespace teamai
