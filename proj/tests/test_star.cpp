#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "teamai/star.hpp"

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

// Outcome enumeration for a peripheral worker's shirk: conditional on him
// staying human, either the central worker is replaced (his own shirk is the
// only missing contribution) or the central worker sees the shirk and joins.
double oracle_star_peripheral(const Instance& inst,
                              const ReplacementStrategy& x, int i) {
  const int n = inst.n();
  const double own = 1.0 - x.x(i);
  const double central = x.x(n - 1);
  return central / own * inst.p(n - 1) + (1.0 - central / own) * inst.p(n - 2);
}

}  // namespace

TEST_CASE("star shirk rate: central worker always faces p_{n-1}") {
  CounterRng rng(41, 0);
  for (int rep = 0; rep < 50; ++rep) {
    const Instance inst = random_instance(rng, 3 + rep % 3);
    const auto x = random_interior(rng, inst.n());
    CHECK(star_shirk_rate(inst, x, inst.n() - 1) == inst.p(inst.n() - 1));
  }
}

TEST_CASE("star shirk rate: peripheral references and the oracle") {
  CHECK(star_shirk_rate(kOring, validate_strategy({0.5, 0.5, 0.0}, 1.0), 0) ==
        doctest::Approx(0.25).epsilon(1e-14));
  CHECK(star_shirk_rate(kOring, validate_strategy({0.2, 0.2, 0.6}, 1.0), 0) ==
        doctest::Approx(0.4375).epsilon(1e-14));

  CounterRng rng(42, 0);
  for (int rep = 0; rep < 100; ++rep) {
    const Instance inst = random_instance(rng, 3 + rep % 3);
    const auto x = random_interior(rng, inst.n());
    for (int i = 0; i + 1 < inst.n(); ++i) {
      const double zeta = star_shirk_rate(inst, x, i);
      CHECK(zeta ==
            doctest::Approx(oracle_star_peripheral(inst, x, i)).epsilon(1e-12));
      CHECK(zeta >= inst.p(inst.n() - 2) - 1e-14);
      CHECK(zeta <= inst.p(inst.n() - 1) + 1e-14);
    }
  }
  CHECK(code_of([&] {
          star_shirk_rate(kOring, validate_strategy({1, 0, 0}, 1.0), 0);
        }) == Errc::FullyReplaced);
}

TEST_CASE("star expected cost: reference values") {
  CHECK(star_expected_cost(kOring, validate_strategy({0.5, 0.5, 0}, 1.0)).total ==
        doctest::Approx(4.333333).epsilon(1e-6));
  CHECK(star_expected_cost(kOring, validate_strategy({1, 0, 0}, 1.0)).total ==
        doctest::Approx(4.333333).epsilon(1e-6));
  CHECK(star_expected_cost(kOring, no_replacement(3)).total ==
        doctest::Approx(4.666667).epsilon(1e-6));
}

TEST_CASE("star cost is symmetric in the peripheral coordinates") {
  CounterRng rng(43, 0);
  for (int rep = 0; rep < 50; ++rep) {
    const Instance inst = random_instance(rng, 4);
    auto x = random_interior(rng, 4).x();
    const double base = star_expected_cost(inst, validate_strategy(x, 1.0)).total;
    std::swap(x[0], x[2]);
    CHECK(star_expected_cost(inst, validate_strategy(x, 1.0)).total ==
          doctest::Approx(base).epsilon(1e-14));
  }
}

TEST_CASE("with the hub safe, only the peripheral sum matters") {
  CounterRng rng(44, 0);
  for (int rep = 0; rep < 50; ++rep) {
    const Instance inst = random_instance(rng, 3 + rep % 3);
    const int n = inst.n();
    std::vector<double> split(static_cast<std::size_t>(n), 0.0);
    double sum = 0.0;
    for (int i = 0; i + 1 < n; ++i) {
      split[static_cast<std::size_t>(i)] = 0.1 + rng.next_double();
      sum += split[static_cast<std::size_t>(i)];
    }
    for (int i = 0; i + 1 < n; ++i) split[static_cast<std::size_t>(i)] /= sum;
    const double cost =
        star_expected_cost(inst, validate_strategy(split, 1.0)).total;

    std::vector<double> equal(static_cast<std::size_t>(n), 1.0 / (n - 1));
    equal[static_cast<std::size_t>(n - 1)] = 0.0;
    const double canonical =
        star_expected_cost(inst, validate_strategy(equal, 1.0)).total;
    CHECK(cost == doctest::Approx(canonical).epsilon(1e-12));
  }
}

TEST_CASE("star condition: power-law margin is exactly zero") {
  for (double alpha : {0.2, 0.5, 0.9}) {
    for (int n : {3, 4, 5}) {
      const StarCondition cond = star_condition(oring_instance(alpha, n, 1.0));
      CHECK(cond.margin == 0.0);
      CHECK(cond.holds);
    }
  }
  const StarCondition zero = star_condition(
      validate_instance(3, 1.0, {0.05, 0.15, 0.30, 0.60}));
  CHECK(zero.margin == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
  CHECK(zero.holds);
  const StarCondition pos = star_condition(
      validate_instance(3, 1.0, {0.01, 0.2, 0.45, 0.75}));
  CHECK(pos.margin == doctest::Approx(0.0525).epsilon(1e-12));
  CHECK_FALSE(pos.holds);
}

TEST_CASE("solve_star: canonical equal split when the condition holds") {
  const StarSolution sol = solve_star(kOring);
  CHECK(sol.canonical);
  CHECK_FALSE(sol.heuristic);
  CHECK(sol.strategy.x(0) == doctest::Approx(0.5));
  CHECK(sol.strategy.x(1) == doctest::Approx(0.5));
  CHECK(sol.strategy.x(2) == 0.0);
  CHECK(sol.cost.total == doctest::Approx(4.333333).epsilon(1e-6));
  CHECK(sol.split_spread <= 1e-12);

  const StarSolution four = solve_star(oring_instance(0.5, 4, 1.0));
  for (int i = 0; i < 3; ++i) {
    CHECK(four.strategy.x(i) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  }
  CHECK(four.strategy.x(3) == 0.0);

  // six workers: five rounded fifth-shares must still fit the capacity
  const StarSolution six = solve_star(oring_instance(0.6, 6, 1.0));
  CHECK(six.canonical);
  CHECK(six.strategy.total() <= 1.0);
  CHECK(six.strategy.x(5) == 0.0);
}

TEST_CASE("solve_star: canonical beats replacing the hub") {
  CounterRng rng(45, 0);
  for (int rep = 0; rep < 20; ++rep) {
    const Instance inst = random_instance(rng, 3 + rep % 3);
    if (!star_condition(inst).holds) continue;
    const StarSolution sol = solve_star(inst);
    std::vector<double> hub(static_cast<std::size_t>(inst.n()), 0.0);
    hub[static_cast<std::size_t>(inst.n() - 1)] = 1.0;
    CHECK(sol.cost.total <=
          star_expected_cost(inst, validate_strategy(hub, 1.0)).total + 1e-12);
    CHECK(sol.strategy.x(inst.n() - 1) == 0.0);
  }
}

TEST_CASE("solve_star: heuristic fallback when the condition fails") {
  const Instance inst = validate_instance(3, 1.0, {0.01, 0.2, 0.45, 0.75});
  const StarSolution sol = solve_star(inst);
  CHECK_FALSE(sol.canonical);
  CHECK(sol.heuristic);
  // the fallback still never loses to 200 random feasible strategies
  CounterRng rng(46, 0);
  for (int rep = 0; rep < 200; ++rep) {
    const auto x = random_interior(rng, 3, 1.0);
    CHECK(sol.cost.total <= star_expected_cost(inst, x).total + 1e-9);
  }
}
