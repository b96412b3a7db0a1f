#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "teamai/chain.hpp"
#include "teamai/optimizer.hpp"

using namespace teamai;
using namespace teamai::testing;

namespace {

const Instance kOring = oring_instance(0.5, 3, 1.0);

Errc code_of(const std::function<void()>& op) {
  try {
    op();
  } catch (const Error& err) {
    return err.code();
  }
  FAIL("expected an Error");
  return Errc::ConfigError;
}

}  // namespace

TEST_CASE("shirk rate: no AI means the cascade runs to the end") {
  const auto x = no_replacement(3);
  CHECK(shirk_success_rate(kOring, x, 0) == doctest::Approx(0.125).epsilon(1e-14));
  CHECK(shirk_success_rate(kOring, x, 1) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(shirk_success_rate(kOring, x, 2) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("shirk rate: the optimal mixture lifts the front-most to p1") {
  const auto x = validate_strategy({0.449490, 0.0, 0.550510}, 1.0);
  CHECK(shirk_success_rate(kOring, x, 0) ==
        doctest::Approx(0.25).epsilon(1e-6));
}

TEST_CASE("shirk rate: the end-most worker never depends on the strategy") {
  CounterRng rng(3, 0);
  for (int rep = 0; rep < 50; ++rep) {
    const Instance inst = random_instance(rng, 3);
    const auto x = random_interior(rng, 3);
    CHECK(shirk_success_rate(inst, x, 2) == inst.p(2));
  }
}

TEST_CASE("shirk rate: fully replaced worker has no defined rate") {
  const auto x = validate_strategy({1.0, 0.0, 0.0}, 1.0);
  CHECK(code_of([&] { shirk_success_rate(kOring, x, 0); }) ==
        Errc::FullyReplaced);
}

TEST_CASE("shirk rate matches the outcome-enumeration oracle") {
  CounterRng rng(5, 0);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 3 + rep % 3;
    const Instance inst = random_instance(rng, n);
    const auto x = random_interior(rng, n);
    for (int i = 0; i < n; ++i) {
      CHECK(shirk_success_rate(inst, x, i) ==
            doctest::Approx(oracle_shirk_rate(inst, x, i)).epsilon(1e-12));
    }
  }
}

TEST_CASE("off-path rate: worked examples") {
  const auto x0 = no_replacement(3);
  CHECK(offpath_shirk_rate(kOring, x0, 2) ==
        doctest::Approx(0.25).epsilon(1e-14));  // predecessor shirked, one effort left
  CHECK(offpath_shirk_rate(kOring, x0, 1) ==
        doctest::Approx(0.125).epsilon(1e-14));  // no effort survives

  const auto x = validate_strategy({0.0, 0.0, 0.4}, 1.0);
  CHECK(offpath_shirk_rate(kOring, x, 1) ==
        doctest::Approx(0.175).epsilon(1e-14));  // 0.6 p0 + 0.4 p1
}

TEST_CASE("off-path rate matches the oracle and its proof bound") {
  CounterRng rng(6, 0);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 3 + rep % 3;
    const Instance inst = random_instance(rng, n);
    const auto x = random_interior(rng, n);
    for (int i = 1; i < n; ++i) {
      const double zhat = offpath_shirk_rate(inst, x, i);
      CHECK(zhat ==
            doctest::Approx(oracle_offpath_rate(inst, x, i)).epsilon(1e-12));
      const double gap = shirk_success_rate(inst, x, i) - zhat;
      CHECK(gap <= inst.p(n) - inst.p(n - 1) + 1e-12);
    }
  }
}

TEST_CASE("off-path rate degenerates when the pair exhausts the capacity") {
  const auto x = validate_strategy({0.5, 0.5, 0.0}, 1.0);
  CHECK(code_of([&] { offpath_shirk_rate(kOring, x, 1); }) == Errc::Degenerate);
}

TEST_CASE("optimal wages: no-AI benchmark and the optimal mixture") {
  const auto w0 = optimal_wages(kOring, no_replacement(3));
  CHECK(w0.value(0) == doctest::Approx(1.0 / 0.875).epsilon(1e-14));
  CHECK(w0.value(1) == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
  CHECK(w0.value(2) == doctest::Approx(2.0).epsilon(1e-14));

  const Optimum opt = solve_oring(0.5, 1.0);
  const auto w = optimal_wages(kOring, opt.strategy);
  CHECK(w.value(0) == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
  CHECK(w.value(1) == doctest::Approx(1.632993).epsilon(1e-6));
  CHECK(w.value(2) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("suboptimal replacement can invert the wage hierarchy") {
  const auto x = validate_strategy({0.5, 0.5, 0.0}, 1.0);
  const auto w = optimal_wages(kOring, x);
  CHECK(w.value(0) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(w.value(1) == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
  CHECK(w.value(0) > w.value(1));

  // every admissible three-worker instance shows the inversion at this point
  CounterRng rng(8, 0);
  for (int rep = 0; rep < 100; ++rep) {
    const Instance inst = random_instance(rng, 3);
    const auto wr = optimal_wages(inst, x);
    CHECK(wr.value(0) > wr.value(1));
  }
}

TEST_CASE("wages are absent exactly where the worker is fully replaced") {
  const auto x = validate_strategy({1.0, 0.0, 0.0}, 1.0);
  const auto w = optimal_wages(kOring, x);
  CHECK_FALSE(w.present(0));
  CHECK(w.present(1));
  CHECK(code_of([&] { w.value(0); }) == Errc::FullyReplaced);
}

TEST_CASE("wage floor: every present wage is at least the no-AI wage") {
  CounterRng rng(9, 0);
  for (int rep = 0; rep < 100; ++rep) {
    const int n = 3 + rep % 3;
    const Instance inst = random_instance(rng, n);
    const auto x = random_interior(rng, n);
    const auto w = optimal_wages(inst, x);
    for (int i = 0; i < n; ++i) {
      CHECK(w.value(i) >= inst.c() / (inst.p(n) - inst.p(i)) - 1e-12);
    }
  }
}

TEST_CASE("expected cost: reference values and the breakdown invariant") {
  CHECK(expected_cost(kOring, no_replacement(3)).total ==
        doctest::Approx(4.476190).epsilon(1e-6));
  CHECK(expected_cost(kOring, validate_strategy({1, 0, 0}, 1.0)).total ==
        doctest::Approx(4.0 + 1.0 / 3.0).epsilon(1e-12));
  const Optimum opt = solve_oring(0.5, 1.0);
  const CostBreakdown cb = expected_cost(kOring, opt.strategy);
  CHECK(cb.total == doctest::Approx(4.265986).epsilon(1e-6));

  CounterRng rng(10, 0);
  for (int rep = 0; rep < 100; ++rep) {
    const int n = 3 + rep % 3;
    const Instance inst = random_instance(rng, n);
    const auto x = random_interior(rng, n);
    const CostBreakdown b = expected_cost(inst, x);
    CHECK(b.total ==
          doctest::Approx(b.ai_cost + b.wage_cost).epsilon(1e-12));
    double sum = 0.0;
    for (double v : b.per_worker) sum += v;
    CHECK(b.total == doctest::Approx(sum).epsilon(1e-12));
  }
}

TEST_CASE("expected cost: sum-of-wages oracle at the no-AI point") {
  CounterRng rng(11, 0);
  for (int rep = 0; rep < 50; ++rep) {
    const int n = 3 + rep % 3;
    const Instance inst = random_instance(rng, n);
    const auto x = no_replacement(n);
    const auto w = optimal_wages(inst, x);
    double wages = 0.0;
    for (int i = 0; i < n; ++i) wages += w.value(i);
    CHECK(expected_cost(inst, x).total ==
          doctest::Approx(inst.p(n) * wages).epsilon(1e-12));
  }
}

TEST_CASE("expected cost approaches the pure-replacement cost continuously") {
  CounterRng rng(12, 0);
  for (int rep = 0; rep < 20; ++rep) {
    const int n = 3 + rep % 3;
    const Instance inst = random_instance(rng, n);
    const double w1 = pure_strategy_costs(inst).replace_worker.front();

    // The wage term of the vanishing worker is squeezed by (1-t), so the
    // approach is linear in 1-t with a bounded slope.
    const double slope_cap =
        10.0 * inst.c() * inst.p(n) / (inst.p(n) - inst.p(n - 1));
    for (double eps : {1e-3, 1e-6}) {
      std::vector<double> xe(static_cast<std::size_t>(n), 0.0);
      xe[0] = 1.0 - eps;
      xe[static_cast<std::size_t>(n - 1)] = eps;
      const double diff =
          std::abs(expected_cost(inst, validate_strategy(xe, 1.0)).total - w1);
      CHECK(diff <= slope_cap * eps);
    }
    // and the extension itself is exact at the corner
    std::vector<double> corner(static_cast<std::size_t>(n), 0.0);
    corner[0] = 1.0;
    CHECK(expected_cost(inst, validate_strategy(corner, 1.0)).total ==
          doctest::Approx(w1).epsilon(1e-12));
  }
}

TEST_CASE("cost gradient: reference decomposition at the no-AI point") {
  const GradientDecomposition g = cost_gradient(kOring, no_replacement(3), 2);
  CHECK(g.direct_saving == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(g.direct_incentive == 0.0);
  CHECK(g.indirect_incentive == doctest::Approx(0.607710).epsilon(1e-6));
  CHECK(g.total == doctest::Approx(-0.392290).epsilon(1e-5));
}

TEST_CASE("cost gradient: front-most closed form and the end-most structure") {
  CounterRng rng(13, 0);
  for (int rep = 0; rep < 100; ++rep) {
    const Instance inst = random_instance(rng, 3);
    const auto x0 = no_replacement(3);
    const GradientDecomposition g = cost_gradient(inst, x0, 0);
    const double zeta1 = inst.p(0);
    const double ref = inst.c() * (zeta1 * zeta1 - inst.p(3) * inst.p(0)) /
                       ((inst.p(3) - zeta1) * (inst.p(3) - zeta1));
    CHECK(g.total == doctest::Approx(ref).epsilon(1e-12));

    const auto xi = random_interior(rng, 3);
    CHECK(cost_gradient(inst, xi, 2).direct_incentive == 0.0);
  }
}

TEST_CASE("cost gradient agrees with central finite differences") {
  CounterRng rng(14, 0);
  for (int rep = 0; rep < 100; ++rep) {
    const int n = 3 + rep % 3;
    const Instance inst = random_instance(rng, n);
    const auto x = random_interior(rng, n, 0.8);
    for (int i = 0; i < n; ++i) {
      const double analytic = cost_gradient(inst, x, i).total;
      const double numeric = fd_cost_partial(inst, x, i);
      CHECK(analytic ==
            doctest::Approx(numeric).epsilon(1e-6).scale(
                std::max(1.0, std::abs(analytic))));
    }
  }
}

TEST_CASE("cost gradient refuses boundary points") {
  const auto x = validate_strategy({1.0, 0.0, 0.0}, 1.0);
  CHECK(code_of([&] { cost_gradient(kOring, x, 1); }) == Errc::Boundary);
}

TEST_CASE("gradient decomposition identity and sign") {
  CounterRng rng(15, 0);
  for (int rep = 0; rep < 100; ++rep) {
    const int n = 3 + rep % 3;
    const Instance inst = random_instance(rng, n);
    const auto x = random_interior(rng, n);
    for (int i = 0; i < n; ++i) {
      const GradientDecomposition g = cost_gradient(inst, x, i);
      CHECK(g.total == doctest::Approx(-g.direct_saving + g.direct_incentive +
                                       g.indirect_incentive)
                           .epsilon(1e-10));
      CHECK(g.direct_saving >= 0.0);
    }
  }
}

TEST_CASE("zeta is monotone in later replacement shares and its own") {
  CounterRng rng(16, 0);
  for (int rep = 0; rep < 100; ++rep) {
    const int n = 3 + rep % 3;
    const Instance inst = random_instance(rng, n);
    const auto x = random_interior(rng, n, 0.7);
    for (int i = 0; i + 1 < n; ++i) {
      const double base = shirk_success_rate(inst, x, i);
      CHECK(base >= inst.p(i) - 1e-14);
      CHECK(base <= inst.p(n - 1) + 1e-14);
      for (int k = i; k < n; ++k) {
        auto bumped = x.x();
        bumped[static_cast<std::size_t>(k)] += 0.05;
        const auto xb = validate_strategy(bumped, 1.0);
        CHECK(shirk_success_rate(inst, xb, i) >= base - 1e-12);
      }
    }
  }
}

TEST_CASE("pure strategy costs: reference values and symmetry") {
  const PureStrategyCosts costs = pure_strategy_costs(kOring);
  CHECK(costs.none == doctest::Approx(4.476190).epsilon(1e-6));
  CHECK(costs.replace_worker[0] == doctest::Approx(4.333333).epsilon(1e-6));
  CHECK(costs.replace_worker[1] == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(costs.replace_worker[2] == doctest::Approx(4.333333).epsilon(1e-6));

  CounterRng rng(17, 0);
  for (int rep = 0; rep < 100; ++rep) {
    const int n = 3 + rep % 4;
    const Instance inst = random_instance(rng, n);
    const PureStrategyCosts pc = pure_strategy_costs(inst);
    for (int i = 0; i < n; ++i) {
      CHECK(pc.replace_worker[static_cast<std::size_t>(i)] ==
            doctest::Approx(pc.replace_worker[static_cast<std::size_t>(n - 1 - i)])
                .epsilon(1e-12));
    }
    // each pure cost agrees with the general evaluator
    for (int j = 0; j < n; ++j) {
      std::vector<double> xj(static_cast<std::size_t>(n), 0.0);
      xj[static_cast<std::size_t>(j)] = 1.0;
      CHECK(pc.replace_worker[static_cast<std::size_t>(j)] ==
            doctest::Approx(
                expected_cost(inst, validate_strategy(xj, 1.0)).total)
                .epsilon(1e-12));
    }
  }
}

TEST_CASE("trigger equilibrium: optimal wages bind, halved wages fail") {
  const Optimum opt = solve_oring(0.5, 1.0);
  const auto w = optimal_wages(kOring, opt.strategy);
  const EquilibriumReport ok =
      verify_trigger_equilibrium(kOring, opt.strategy, w, 1e-9);
  CHECK(ok.pass);
  for (const auto& e : ok.entries) {
    CHECK(std::abs(e.on_path_slack) <= 1e-12);
  }

  WageSchedule halved = w;
  for (auto& entry : halved.w) {
    if (entry) *entry *= 0.5;
  }
  const EquilibriumReport bad =
      verify_trigger_equilibrium(kOring, opt.strategy, halved, 1e-9);
  CHECK_FALSE(bad.pass);
  for (const auto& e : bad.entries) {
    CHECK_FALSE(e.on_path_pass);
  }
}

TEST_CASE("trigger equilibrium: off-path slack for the end-most worker") {
  const auto x = no_replacement(3);
  const auto w = optimal_wages(kOring, x);
  const EquilibriumReport rep = verify_trigger_equilibrium(kOring, x, w, 1e-9);
  CHECK(rep.pass);
  const auto& e3 = rep.entry(2);
  CHECK(e3.off_path_applicable);
  // 0.25*2 - (0.5*2 - 1) = 0.5
  CHECK(e3.off_path_slack == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("trigger equilibrium: mismatched wage shape is rejected") {
  const auto x = validate_strategy({1.0, 0.0, 0.0}, 1.0);
  const auto w = optimal_wages(kOring, no_replacement(3));
  CHECK(code_of([&] { verify_trigger_equilibrium(kOring, x, w, 1e-9); }) ==
        Errc::InconsistentWages);
}

TEST_CASE("scripted-AI cost: references and coincidence at x = 0") {
  CHECK(strategic_ai_cost(kOring, validate_strategy({0, 0, 1}, 1.0)).total ==
        doctest::Approx(3.476190).epsilon(1e-6));
  CHECK(strategic_ai_cost(kOring, validate_strategy({1, 0, 0}, 1.0)).total ==
        doctest::Approx(4.333333).epsilon(1e-6));

  CounterRng rng(18, 0);
  for (int rep = 0; rep < 50; ++rep) {
    const int n = 3 + rep % 3;
    const Instance inst = random_instance(rng, n);
    const auto x0 = no_replacement(n);
    CHECK(strategic_ai_cost(inst, x0).total ==
          doctest::Approx(expected_cost(inst, x0).total).epsilon(1e-12));
  }
}
