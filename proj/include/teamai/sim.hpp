#ifndef TEAMAI_SIM_HPP
#define TEAMAI_SIM_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "teamai/chain.hpp"
#include "teamai/instance.hpp"
#include "teamai/rng.hpp"

namespace teamai {

/// Deterministic shirk cascade for the chain. The forced shirker and every
/// later human shirk until the first AI position; the worker right after an
/// AI sees a contribution signal and reverts to effort. Replaced positions
/// always contribute. Returns the per-position effort decisions (AI
/// positions report 1).
std::vector<int> domino_trace(const Instance& inst,
                              const std::vector<int>& replaced_set,
                              std::optional<int> first_shirker);

/// One realized play of the sequential game.
struct Trace {
  int replaced = -1;             // realized replacement, -1 = none
  std::vector<int> efforts;      // per position; replaced positions show 1
  std::vector<int> signals;      // signals[i] = predecessor contribution; [0]=1
  bool success = false;
  double principal_cost = 0.0;   // realized AI cost + wages actually paid
  std::vector<double> worker_payoffs;  // wage if paid, minus own effort cost
};

/// Realizes the replacement draw (at most one position is replaced, with
/// probability x_i each), plays the trigger profile with an optional forced
/// deviation, and draws success from the realized contribution count.
/// Throws InconsistentWages when the wage schedule does not match x.
Trace play_once(const Instance& inst, const ReplacementStrategy& x,
                const WageSchedule& w, std::optional<int> forced_deviant,
                CounterRng& rng);

struct Estimate {
  double mean = 0.0;
  double std_error = 0.0;
};

/// Aggregate of a Monte Carlo run. Trials are keyed by (seed, trial index)
/// counter streams and reduced in a fixed chunk order, so reports replay
/// bitwise identically for a given seed regardless of thread count.
struct SimReport {
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  int deviant = -1;  // forced deviating worker, -1 = none
  Estimate success_rate;
  Estimate mean_cost;
  std::vector<Estimate> mean_payoffs;

  // Present only when a deviant is forced: success rates conditioned on the
  // deviant being human, and on both the deviant and his successor being
  // human (the samples that estimate the on-path and off-path shirk rates).
  std::int64_t deviant_human_trials = 0;
  Estimate deviant_human_success;
  std::int64_t pair_human_trials = 0;
  Estimate pair_human_success;
};

SimReport monte_carlo(const Instance& inst, const ReplacementStrategy& x,
                      const WageSchedule& w, std::int64_t trials,
                      std::uint64_t seed,
                      std::optional<int> deviant = std::nullopt);

}  // namespace teamai

#endif  // TEAMAI_SIM_HPP
