#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "oracles.hpp"
#include "teamai/sim.hpp"

using namespace teamai;
using namespace teamai::testing;

namespace {

const Instance kOring = oring_instance(0.5, 3, 1.0);

bool same_estimate(const Estimate& a, const Estimate& b) {
  return a.mean == b.mean && a.std_error == b.std_error;
}

bool same_report(const SimReport& a, const SimReport& b) {
  if (!(a.trials == b.trials && a.seed == b.seed && a.deviant == b.deviant)) {
    return false;
  }
  if (!same_estimate(a.success_rate, b.success_rate)) return false;
  if (!same_estimate(a.mean_cost, b.mean_cost)) return false;
  if (a.mean_payoffs.size() != b.mean_payoffs.size()) return false;
  for (std::size_t i = 0; i < a.mean_payoffs.size(); ++i) {
    if (!same_estimate(a.mean_payoffs[i], b.mean_payoffs[i])) return false;
  }
  return a.deviant_human_trials == b.deviant_human_trials &&
         same_estimate(a.deviant_human_success, b.deviant_human_success) &&
         a.pair_human_trials == b.pair_human_trials &&
         same_estimate(a.pair_human_success, b.pair_human_success);
}

}  // namespace

TEST_CASE("domino cascade: deterministic traces") {
  CHECK(domino_trace(kOring, {}, 0) == std::vector<int>{0, 0, 0});
  CHECK(domino_trace(kOring, {1}, 0) == std::vector<int>{0, 1, 1});
  CHECK(domino_trace(kOring, {}, std::nullopt) == std::vector<int>{1, 1, 1});
  CHECK(domino_trace(kOring, {2}, 1) == std::vector<int>{1, 0, 1});
  // an AI never deviates: forcing a shirk at a replaced position is a no-op
  CHECK(domino_trace(kOring, {0}, 0) == std::vector<int>{1, 1, 1});
  const Instance five = oring_instance(0.5, 5, 1.0);
  CHECK(domino_trace(five, {3}, 1) == std::vector<int>{1, 0, 0, 1, 1});
}

TEST_CASE("play_once: all-effort path, cascade path, and bookkeeping") {
  const auto x = validate_strategy({0.0, 0.0, 1.0}, 1.0);
  const auto w = optimal_wages(kOring, x);
  CounterRng rng(99, 0);
  const Trace tr = play_once(kOring, x, w, 0, rng);
  CHECK(tr.replaced == 2);
  CHECK(tr.efforts == std::vector<int>{0, 0, 1});
  CHECK(tr.signals == std::vector<int>{1, 0, 0});
  // worker 1 and 2 shirk, AI at 3 contributes: one contribution
  CHECK(tr.worker_payoffs[2] == 0.0);

  const auto x0 = no_replacement(3);
  const auto w0 = optimal_wages(kOring, x0);
  CounterRng rng2(99, 1);
  const Trace on_path = play_once(kOring, x0, w0, std::nullopt, rng2);
  CHECK(on_path.replaced == -1);
  CHECK(on_path.efforts == std::vector<int>{1, 1, 1});
  CHECK(on_path.success);  // p_3 = 1 for the power-law instance
  double wages = 0.0;
  for (int i = 0; i < 3; ++i) wages += w0.value(i);
  CHECK(on_path.principal_cost == doctest::Approx(wages).epsilon(1e-12));
  for (int i = 0; i < 3; ++i) {
    CHECK(on_path.worker_payoffs[static_cast<std::size_t>(i)] ==
          doctest::Approx(w0.value(i) - 1.0).epsilon(1e-12));
  }
}

TEST_CASE("play_once rejects wages that disagree with the strategy") {
  const auto x = validate_strategy({1.0, 0.0, 0.0}, 1.0);
  const auto w = optimal_wages(kOring, no_replacement(3));
  CounterRng rng(1, 1);
  CHECK_THROWS_AS(play_once(kOring, x, w, std::nullopt, rng), Error);
}

TEST_CASE("fixed seed replays the exact trace") {
  const auto x = validate_strategy({0.3, 0.0, 0.4}, 1.0);
  const auto w = optimal_wages(kOring, x);
  for (std::uint64_t t = 0; t < 20; ++t) {
    CounterRng a(1234, t), b(1234, t);
    const Trace ta = play_once(kOring, x, w, 1, a);
    const Trace tb = play_once(kOring, x, w, 1, b);
    CHECK(ta.replaced == tb.replaced);
    CHECK(ta.efforts == tb.efforts);
    CHECK(ta.success == tb.success);
    CHECK(ta.principal_cost == tb.principal_cost);
  }
}

TEST_CASE("single-deviation trials always match the cascade oracle") {
  const auto x = validate_strategy({0.2, 0.1, 0.3}, 1.0);
  const auto w = optimal_wages(kOring, x);
  for (std::uint64_t t = 0; t < 500; ++t) {
    CounterRng rng(77, t);
    const Trace tr = play_once(kOring, x, w, 1, rng);
    std::vector<int> replaced;
    if (tr.replaced >= 0) replaced.push_back(tr.replaced);
    CHECK(tr.efforts == domino_trace(kOring, replaced, 1));
  }
}

TEST_CASE("monte carlo: no-deviation run matches analytic references") {
  const Instance inst = validate_instance(3, 1.0, {0.05, 0.15, 0.30, 0.60});
  const auto x = no_replacement(3);
  const auto w = optimal_wages(inst, x);
  const SimReport rep = monte_carlo(inst, x, w, 100000, 42);
  CHECK(rep.success_rate.std_error ==
        doctest::Approx(0.00155).epsilon(0.05));  // sqrt(0.6*0.4/1e5)
  CHECK(std::abs(rep.success_rate.mean - 0.6) <= 3 * rep.success_rate.std_error);
  CHECK(std::abs(rep.mean_cost.mean - expected_cost(inst, x).total) <=
        3 * rep.mean_cost.std_error);
  for (int i = 0; i < 3; ++i) {
    const double ref = inst.p(3) * w.value(i) - 1.0;
    CHECK(std::abs(rep.mean_payoffs[static_cast<std::size_t>(i)].mean - ref) <=
          3 * rep.mean_payoffs[static_cast<std::size_t>(i)].std_error);
  }
}

TEST_CASE("monte carlo: conditional rates estimate both shirk rates") {
  const Instance inst = validate_instance(3, 1.0, {0.05, 0.15, 0.30, 0.60});
  const auto x = validate_strategy({0.0, 0.0, 0.5}, 1.0);
  const auto w = optimal_wages(inst, x);
  const SimReport rep = monte_carlo(inst, x, w, 100000, 42, 1);
  CHECK(rep.deviant == 1);
  CHECK(std::abs(rep.deviant_human_success.mean - 0.225) <=
        3 * rep.deviant_human_success.std_error);
  CHECK(std::abs(rep.pair_human_success.mean -
                 offpath_shirk_rate(inst, x, 2)) <=
        3 * rep.pair_human_success.std_error);
  // about half the trials replace the end-most worker
  CHECK(rep.pair_human_trials < 60000);
  CHECK(rep.pair_human_trials > 40000);
}

TEST_CASE("monte carlo: bitwise replay and seed sensitivity") {
  const auto x = validate_strategy({0.2, 0.0, 0.5}, 1.0);
  const auto w = optimal_wages(kOring, x);
  const SimReport a = monte_carlo(kOring, x, w, 30000, 7, 0);
  const SimReport b = monte_carlo(kOring, x, w, 30000, 7, 0);
  CHECK(same_report(a, b));
  const SimReport c = monte_carlo(kOring, x, w, 30000, 8, 0);
  CHECK_FALSE(same_report(a, c));
}

TEST_CASE("monte carlo: thread count does not change the report") {
  const auto x = validate_strategy({0.3, 0.0, 0.4}, 1.0);
  const auto w = optimal_wages(kOring, x);
  setenv("TEAMAI_THREADS", "1", 1);
  const SimReport serial = monte_carlo(kOring, x, w, 50000, 5);
  setenv("TEAMAI_THREADS", "7", 1);
  const SimReport threaded = monte_carlo(kOring, x, w, 50000, 5);
  unsetenv("TEAMAI_THREADS");
  CHECK(same_report(serial, threaded));
}

TEST_CASE("monte carlo: deviation cuts the success rate to the shirk level") {
  // forced front-most deviation with nobody replaced: the cascade kills the
  // project unless the bottom rung of the production holds it up
  const auto x = no_replacement(3);
  const auto w = optimal_wages(kOring, x);
  const SimReport rep = monte_carlo(kOring, x, w, 50000, 11, 0);
  CHECK(std::abs(rep.success_rate.mean - kOring.p(0)) <=
        3 * rep.success_rate.std_error);
}
