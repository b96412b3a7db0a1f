#include "teamai/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "teamai/chain.hpp"
#include "teamai/optimizer.hpp"
#include "teamai/sim.hpp"
#include "teamai/star.hpp"
#include "teamai/task.hpp"

namespace teamai {

using nlohmann::json;

std::string format_sig(double value, int digits) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value,
                           std::chars_format::general, digits);
  return std::string(buf, res.ptr);
}

void write_text_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(Errc::IoError, "cannot open '" + tmp.string() + "' for writing");
    out << content;
    if (!out) fail(Errc::IoError, "short write to '" + tmp.string() + "'");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fail(Errc::IoError, "cannot move report into place at '" + path + "': " +
                            ec.message());
  }
}

namespace {

json wages_json(const WageSchedule& w) {
  json arr = json::array();
  for (const auto& entry : w.w) {
    if (entry) {
      arr.push_back(*entry);
    } else {
      arr.push_back(nullptr);
    }
  }
  return arr;
}

json cost_json(const CostBreakdown& cb) {
  return json{{"ai_cost", cb.ai_cost},
              {"wage_cost", cb.wage_cost},
              {"total", cb.total},
              {"per_worker", cb.per_worker}};
}

json gradient_json(const GradientDecomposition& g) {
  return json{{"direct_saving", g.direct_saving},
              {"direct_incentive", g.direct_incentive},
              {"indirect_incentive", g.indirect_incentive},
              {"total", g.total}};
}

json equilibrium_json(const EquilibriumReport& rep) {
  json entries = json::array();
  for (const auto& e : rep.entries) {
    json row{{"worker", e.worker + 1}, {"replaced", e.replaced}};
    if (!e.replaced) {
      row["on_path_slack"] = e.on_path_slack;
      row["on_path_pass"] = e.on_path_pass;
      if (e.off_path_applicable) {
        row["off_path_slack"] = e.off_path_slack;
        row["off_path_pass"] = e.off_path_pass;
      }
    }
    entries.push_back(row);
  }
  return json{{"tol", rep.tol}, {"pass", rep.pass}, {"workers", entries}};
}

json diagnostics_json(const SolverDiagnostics& d) {
  json out{{"heuristic", d.heuristic}};
  if (d.grid_points > 0) {
    out["grid_step"] = d.grid_step;
    out["grid_points"] = d.grid_points;
    out["refine_passes"] = d.refine_passes;
  }
  if (d.front_at_zero) out["front_at_zero"] = true;
  if (!d.tie_set.empty()) out["tie_set"] = d.tie_set;
  if (!d.notes.empty()) out["notes"] = d.notes;
  return out;
}

json instance_json(const Instance& inst, const Config& cfg) {
  json out{{"n", inst.n()}, {"c", inst.c()}, {"p", inst.p()}};
  if (cfg.oring_alpha) out["oring_alpha"] = *cfg.oring_alpha;
  return out;
}

json estimate_json(const Estimate& e, double reference) {
  json out{{"mean", e.mean}, {"std_error", e.std_error}, {"analytic", reference}};
  if (e.std_error > 0.0) {
    out["z"] = (e.mean - reference) / e.std_error;
  }
  return out;
}

void table_row(std::ostringstream& os, const std::string& label,
               const std::string& value) {
  os << "  " << label;
  for (std::size_t i = label.size(); i < 28; ++i) os << ' ';
  os << value << '\n';
}

std::string vec_str(const std::vector<double>& v, int digits = 6) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += format_sig(v[i], digits);
  }
  return out + ")";
}

std::string wages_str(const WageSchedule& w) {
  std::string out = "(";
  for (int i = 0; i < w.size(); ++i) {
    if (i) out += ", ";
    out += w.present(i) ? format_sig(w.value(i), 6) : "-";
  }
  return out + ")";
}

Optimum solve_for_config(const Config& cfg, const Instance& inst) {
  switch (cfg.model) {
    case ModelKind::Chain:
      if (cfg.oring_alpha && inst.n() == 3) {
        return solve_oring(*cfg.oring_alpha, cfg.c);
      }
      if (inst.n() == 3) return solve_chain_n3(inst);
      return solve_chain_general(
          inst, cfg.solver.grid_step.value_or(default_grid_step(inst.n())));
    case ModelKind::Task:
      return solve_task_based(inst, cfg.capacity);
    case ModelKind::Strategic:
      return solve_strategic(inst);
    case ModelKind::Star:
      break;  // handled by the caller
  }
  fail(Errc::ConfigError, "unsupported model");
}

}  // namespace

Rendered build_solve_report(const Config& cfg) {
  const Instance inst = instance_from_config(cfg);
  json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["command"] = "solve";
  doc["model"] = model_kind_name(cfg.model);
  doc["instance"] = instance_json(inst, cfg);

  std::ostringstream table;
  table << "model: " << model_kind_name(cfg.model) << "   n=" << inst.n()
        << "   c=" << format_sig(inst.c(), 6) << "   p=" << vec_str(inst.p())
        << "\n\n";

  if (cfg.model == ModelKind::Star) {
    const StarSolution sol = solve_star(inst);
    doc["solution"] = json{{"x", sol.strategy.x()},
                           {"wages", wages_json(sol.wages)},
                           {"cost", cost_json(sol.cost)},
                           {"canonical", sol.canonical},
                           {"condition_margin", sol.condition_margin},
                           {"split_spread", sol.split_spread},
                           {"heuristic", sol.heuristic}};
    table_row(table, "x*", vec_str(sol.strategy.x()));
    table_row(table, "wages", wages_str(sol.wages));
    table_row(table, "total cost", format_sig(sol.cost.total, 12));
    table_row(table, "canonical equal split", sol.canonical ? "yes" : "no (heuristic)");
    table_row(table, "condition margin", format_sig(sol.condition_margin, 6));
    return {doc, table.str()};
  }

  const Optimum opt = solve_for_config(cfg, inst);
  doc["solution"] = json{{"x", opt.strategy.x()},
                         {"wages", wages_json(opt.wages)},
                         {"cost", cost_json(opt.cost)},
                         {"utilization", opt.utilization},
                         {"method", solve_method_name(opt.method)},
                         {"diagnostics", diagnostics_json(opt.diagnostics)}};
  table_row(table, "x*", vec_str(opt.strategy.x()));
  table_row(table, "wages", wages_str(opt.wages));
  table_row(table, "total cost", format_sig(opt.cost.total, 12));
  table_row(table, "  ai / wage", format_sig(opt.cost.ai_cost, 6) + " / " +
                                      format_sig(opt.cost.wage_cost, 6));
  table_row(table, "utilization", format_sig(opt.utilization, 6));
  table_row(table, "method", solve_method_name(opt.method));

  if (cfg.model == ModelKind::Chain) {
    // Gradient decomposition at the optimum (one-sided on the capacity face).
    bool interior = true;
    for (int i = 0; i < inst.n(); ++i) {
      if (opt.strategy.x(i) >= 1.0) interior = false;
    }
    if (interior) {
      json grads = json::array();
      for (int i = 0; i < inst.n(); ++i) {
        grads.push_back(gradient_json(cost_gradient(inst, opt.strategy, i)));
      }
      doc["gradient_at_optimum"] = grads;

      const GapReport gap = wage_gap_report(inst, opt.strategy);
      doc["wage_gap"] = json{{"gap_no_ai", gap.gap_no_ai},
                             {"gap_at_x", gap.gap_at_x},
                             {"ratio", gap.ratio}};
      table_row(table, "wage gap (no AI -> x*)",
                format_sig(gap.gap_no_ai, 6) + " -> " +
                    format_sig(gap.gap_at_x, 6) + "  (ratio " +
                    format_sig(gap.ratio, 6) + ")");

      const PayoffReport pay = payoff_report(inst, opt.strategy);
      doc["payoffs"] = json{{"at_x", pay.payoffs},
                            {"no_ai", pay.baseline},
                            {"delta", pay.deltas},
                            {"ordering", pay.ordering}};
      table_row(table, "payoffs", vec_str(pay.payoffs));
      table_row(table, "payoff deltas vs no AI", vec_str(pay.deltas));
      if (!pay.ordering.empty()) table_row(table, "payoff ordering", pay.ordering);
    }

    if (inst.n() == 3) {
      const UtilizationCondition uc = utilization_condition(inst);
      doc["utilization_condition"] = json{{"underutilize", uc.underutilize},
                                          {"margin", uc.margin}};
      table_row(table, "underutilization margin",
                format_sig(uc.margin, 6) +
                    (uc.underutilize ? "  (capacity left unused)"
                                     : "  (capacity exhausted)"));
    }

    const EquilibriumReport eq =
        verify_trigger_equilibrium(inst, opt.strategy, opt.wages, cfg.solver.tol);
    doc["equilibrium"] = equilibrium_json(eq);
    table_row(table, "equilibrium check", eq.pass ? "pass" : "FAIL");
  }

  if (cfg.model == ModelKind::Task && !opt.diagnostics.tie_set.empty()) {
    table_row(table, "tied strategies",
              std::to_string(opt.diagnostics.tie_set.size()));
  }

  return {doc, table.str()};
}

Rendered build_simulate_report(const Config& cfg, std::int64_t trials,
                               std::uint64_t seed) {
  if (cfg.model != ModelKind::Chain) {
    fail(Errc::ConfigError, "simulate supports the chain model only");
  }
  const Instance inst = instance_from_config(cfg);

  ReplacementStrategy x = cfg.strategy
                              ? validate_strategy(*cfg.strategy, cfg.capacity)
                              : solve_for_config(cfg, inst).strategy;
  const WageSchedule w = optimal_wages(inst, x);
  std::optional<int> deviant;
  if (cfg.deviant) deviant = *cfg.deviant - 1;

  const SimReport rep = monte_carlo(inst, x, w, trials, seed, deviant);
  const CostBreakdown analytic_cost = expected_cost(inst, x);
  const double pn = inst.p(inst.n());

  json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["command"] = "simulate";
  doc["model"] = model_kind_name(cfg.model);
  doc["instance"] = instance_json(inst, cfg);
  doc["trials"] = rep.trials;
  doc["seed"] = rep.seed;
  doc["x"] = x.x();
  doc["wages"] = wages_json(w);
  doc["success_rate"] = estimate_json(rep.success_rate, pn);
  doc["mean_cost"] = estimate_json(rep.mean_cost, analytic_cost.total);
  json payoffs = json::array();
  for (int i = 0; i < inst.n(); ++i) {
    const double ref =
        x.x(i) >= 1.0 ? 0.0 : (1.0 - x.x(i)) * (pn * w.value(i) - inst.c());
    payoffs.push_back(estimate_json(
        rep.mean_payoffs[static_cast<std::size_t>(i)], ref));
  }
  doc["mean_payoffs"] = payoffs;

  std::ostringstream table;
  table << "simulate: trials=" << trials << " seed=" << seed << "\n\n";
  table_row(table, "success rate",
            format_sig(rep.success_rate.mean, 6) + "  (analytic " +
                format_sig(pn, 6) + ")");
  table_row(table, "mean principal cost",
            format_sig(rep.mean_cost.mean, 6) + "  (analytic " +
                format_sig(analytic_cost.total, 6) + ")");

  if (deviant) {
    const int d = *deviant;
    doc["deviant"] = d + 1;
    json cond;
    cond["trials"] = rep.deviant_human_trials;
    const double zeta_ref = shirk_success_rate(inst, x, d);
    cond["success_rate"] = estimate_json(rep.deviant_human_success, zeta_ref);
    doc["deviant_human"] = cond;
    table_row(table, "deviant-human success",
              format_sig(rep.deviant_human_success.mean, 6) + "  (analytic " +
                  format_sig(zeta_ref, 6) + ")");

    if (d + 1 < inst.n() && x.x(d) + x.x(d + 1) < 1.0) {
      json pair;
      pair["trials"] = rep.pair_human_trials;
      const double zhat_ref = offpath_shirk_rate(inst, x, d + 1);
      pair["success_rate"] = estimate_json(rep.pair_human_success, zhat_ref);
      doc["deviant_pair_human"] = pair;
      table_row(table, "pair-human success",
                format_sig(rep.pair_human_success.mean, 6) + "  (analytic " +
                    format_sig(zhat_ref, 6) + ")");
    }
  }
  return {doc, table.str()};
}

std::string sweep_csv(double alpha_start, double alpha_end, int steps) {
  if (!(alpha_start > 0.0) || !(alpha_start < alpha_end) || !(alpha_end < 1.0)) {
    fail(Errc::BadRange, "need 0 < alpha_start < alpha_end < 1");
  }
  if (steps < 2) fail(Errc::BadRange, "need at least 2 steps");

  std::string out =
      "alpha,x1,x3,w1,w2,w3,gap0,gapx,gap_ratio,payoff1,payoff2,payoff3,delta1\n";
  for (int s = 0; s < steps; ++s) {
    const double alpha =
        alpha_start + (alpha_end - alpha_start) * s / (steps - 1);
    const Optimum opt = solve_oring(alpha, 1.0);
    const Instance inst = oring_instance(alpha, 3, 1.0);
    const GapReport gap = wage_gap_report(inst, opt.strategy);
    const PayoffReport pay = payoff_report(inst, opt.strategy);
    const double row[] = {alpha,
                          opt.strategy.x(0),
                          opt.strategy.x(2),
                          opt.wages.value(0),
                          opt.wages.value(1),
                          opt.wages.value(2),
                          gap.gap_no_ai,
                          gap.gap_at_x,
                          gap.ratio,
                          pay.payoffs[0],
                          pay.payoffs[1],
                          pay.payoffs[2],
                          pay.deltas[0]};
    for (std::size_t i = 0; i < std::size(row); ++i) {
      if (i) out += ',';
      out += format_sig(row[i], 12);
    }
    out += '\n';
  }
  return out;
}

}  // namespace teamai
