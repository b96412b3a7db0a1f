#include "teamai/chain.hpp"

#include <cassert>
#include <cmath>
#include <string>

namespace teamai {

namespace {

void check_size(const Instance& inst, const ReplacementStrategy& x) {
  if (x.size() != inst.n()) {
    fail(Errc::BadLength, "strategy has " + std::to_string(x.size()) +
                              " entries for a team of " +
                              std::to_string(inst.n()));
  }
}

void check_position(const Instance& inst, int i) {
  if (i < 0 || i >= inst.n()) {
    fail(Errc::OutOfRange, "worker index " + std::to_string(i));
  }
}

}  // namespace

double shirk_success_rate(const Instance& inst, const ReplacementStrategy& x,
                          int i) {
  check_size(inst, x);
  check_position(inst, i);
  const int n = inst.n();
  if (x.x(i) >= 1.0) {
    fail(Errc::FullyReplaced, "shirk rate undefined for worker " +
                                  std::to_string(i + 1) + " with x_i = 1");
  }
  // zeta_i = p_i + sum_{k>i} x_k/(1-x_i) * (p_{n-k+i} - p_i): a successor
  // replaced at position k stops the cascade there, leaving n-k+i efforts.
  double zeta = inst.p(i);
  const double own = 1.0 - x.x(i);
  for (int k = i + 1; k < n; ++k) {
    zeta += x.x(k) / own * (inst.p(n - k + i) - inst.p(i));
  }
  return zeta;
}

double offpath_shirk_rate(const Instance& inst, const ReplacementStrategy& x,
                          int i) {
  check_size(inst, x);
  check_position(inst, i);
  if (i < 1) {
    fail(Errc::OutOfRange, "the front-most worker has no predecessor to observe");
  }
  const int n = inst.n();
  const double denom = 1.0 - x.x(i) - x.x(i - 1);
  if (!(denom > 0.0)) {
    fail(Errc::Degenerate,
         "x_i + x_{i-1} = 1: worker " + std::to_string(i + 1) +
             " can never observe a human predecessor shirk");
  }
  // Worker i saw a shirk, so neither i nor i-1 is replaced. With a
  // predecessor replaced or nobody replaced the whole tail shirks (p_{i-1}
  // efforts remain); a replaced successor at k restarts effort behind it.
  double mass_from_pred = 1.0;  // 1 - sum_{k >= i-1} x_k
  for (int k = i - 1; k < n; ++k) mass_from_pred -= x.x(k);
  double zhat = inst.p(i - 1) * mass_from_pred;
  for (int k = i + 1; k < n; ++k) {
    zhat += x.x(k) * inst.p(n - 1 - k + i);
  }
  return zhat / denom;
}

WageSchedule optimal_wages(const Instance& inst, const ReplacementStrategy& x) {
  check_size(inst, x);
  const int n = inst.n();
  WageSchedule ws;
  ws.w.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (x.x(i) >= 1.0) continue;  // no contract for a fully replaced worker
    const double zeta = shirk_success_rate(inst, x, i);
    ws.w[static_cast<std::size_t>(i)] = inst.c() / (inst.p(n) - zeta);
  }
  return ws;
}

CostBreakdown expected_cost(const Instance& inst, const ReplacementStrategy& x) {
  check_size(inst, x);
  const int n = inst.n();
  const double pn = inst.p(n);
  CostBreakdown cb;
  cb.per_worker.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double xi = x.x(i);
    const double ai = xi * inst.c();
    double wage = 0.0;
    if (xi < 1.0) {
      const double zeta = shirk_success_rate(inst, x, i);
      wage = (1.0 - xi) * pn * inst.c() / (pn - zeta);
    }
    cb.ai_cost += ai;
    cb.wage_cost += wage;
    cb.per_worker[static_cast<std::size_t>(i)] = ai + wage;
  }
  cb.total = cb.ai_cost + cb.wage_cost;
  return cb;
}

GradientDecomposition cost_gradient(const Instance& inst,
                                    const ReplacementStrategy& x, int i) {
  check_size(inst, x);
  check_position(inst, i);
  const int n = inst.n();
  for (int k = 0; k < n; ++k) {
    if (x.x(k) >= 1.0) {
      fail(Errc::Boundary, "gradient undefined with x[" + std::to_string(k) +
                               "] = 1 (wage has no limit there)");
    }
  }
  const double pn = inst.p(n);
  const double c = inst.c();
  GradientDecomposition g;

  const double zeta_i = shirk_success_rate(inst, x, i);
  const double wi = c / (pn - zeta_i);
  g.direct_saving = pn * wi - c;

  // dzeta_i/dx_i scales the successor terms by 1/(1-x_i).
  const double dzi_dxi = (zeta_i - inst.p(i)) / (1.0 - x.x(i));
  g.direct_incentive =
      (1.0 - x.x(i)) * pn * c * dzi_dxi / ((pn - zeta_i) * (pn - zeta_i));

  for (int k = 0; k < i; ++k) {
    const double zeta_k = shirk_success_rate(inst, x, k);
    const double dzk_dxi = (inst.p(n - i + k) - inst.p(k)) / (1.0 - x.x(k));
    g.indirect_incentive +=
        (1.0 - x.x(k)) * pn * c * dzk_dxi / ((pn - zeta_k) * (pn - zeta_k));
  }

  g.total = -g.direct_saving + g.direct_incentive + g.indirect_incentive;
  return g;
}

double PureStrategyCosts::min_cost() const {
  double best = none;
  for (double w : replace_worker) best = std::min(best, w);
  return best;
}

std::vector<std::pair<std::string, double>> PureStrategyCosts::rows() const {
  std::vector<std::pair<std::string, double>> out;
  out.emplace_back("replace none", none);
  for (std::size_t i = 0; i < replace_worker.size(); ++i) {
    out.emplace_back("replace worker " + std::to_string(i + 1),
                     replace_worker[i]);
  }
  return out;
}

PureStrategyCosts pure_strategy_costs(const Instance& inst) {
  const int n = inst.n();
  const double pn = inst.p(n);
  const double c = inst.c();
  PureStrategyCosts out;
  for (int i = 0; i < n; ++i) out.none += pn * c / (pn - inst.p(i));
  out.replace_worker.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    // Workers before the replaced position j see the cascade stop at j
    // (zeta = p_{n+k-j} for worker k < j); workers after it are unaffected.
    double cost = c;
    for (int k = 0; k < j; ++k) cost += pn * c / (pn - inst.p(n + k - j));
    for (int k = j + 1; k < n; ++k) cost += pn * c / (pn - inst.p(k));
    out.replace_worker[static_cast<std::size_t>(j)] = cost;
  }
  return out;
}

EquilibriumReport verify_trigger_equilibrium(const Instance& inst,
                                             const ReplacementStrategy& x,
                                             const WageSchedule& w,
                                             double tol) {
  check_size(inst, x);
  if (w.size() != inst.n()) {
    fail(Errc::InconsistentWages, "wage schedule has " +
                                      std::to_string(w.size()) +
                                      " entries for a team of " +
                                      std::to_string(inst.n()));
  }
  const int n = inst.n();
  const double pn = inst.p(n);
  const double c = inst.c();
  EquilibriumReport report;
  report.tol = tol;
  report.pass = true;
  for (int i = 0; i < n; ++i) {
    EquilibriumEntry e;
    e.worker = i;
    if (x.x(i) >= 1.0) {
      if (w.present(i)) {
        fail(Errc::InconsistentWages,
             "worker " + std::to_string(i + 1) +
                 " is fully replaced but carries a wage");
      }
      e.replaced = true;
      report.entries.push_back(e);
      continue;
    }
    if (!w.present(i)) {
      fail(Errc::InconsistentWages,
           "worker " + std::to_string(i + 1) + " lacks a wage while x_i < 1");
    }
    const double wi = w.value(i);
    const double zeta = shirk_success_rate(inst, x, i);
    e.on_path_slack = pn * wi - c - zeta * wi;
    e.on_path_pass = std::abs(e.on_path_slack) <= tol;

    if (i >= 1 && x.x(i) + x.x(i - 1) < 1.0) {
      const double zhat = offpath_shirk_rate(inst, x, i);
      e.off_path_applicable = true;
      e.off_path_slack = zhat * wi - (inst.p(n - 1) * wi - c);
      e.off_path_pass = e.off_path_slack >= -tol;
    }

    if (!e.on_path_pass || (e.off_path_applicable && !e.off_path_pass)) {
      report.pass = false;
    }
    report.entries.push_back(e);
  }
  return report;
}

CostBreakdown strategic_ai_cost(const Instance& inst,
                                const ReplacementStrategy& x) {
  check_size(inst, x);
  const int n = inst.n();
  const double pn = inst.p(n);
  const double c = inst.c();
  CostBreakdown cb;
  cb.per_worker.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    // A trigger-playing AI lets the cascade run through it, so shirking
    // looks exactly as it does in an all-human team: zeta_i = p_{i-1}.
    const double ai = x.x(i) * c;
    const double wage = (1.0 - x.x(i)) * pn * c / (pn - inst.p(i));
    cb.ai_cost += ai;
    cb.wage_cost += wage;
    cb.per_worker[static_cast<std::size_t>(i)] = ai + wage;
  }
  cb.total = cb.ai_cost + cb.wage_cost;
  return cb;
}

}  // namespace teamai
