#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "teamai/chain.hpp"
#include "teamai/instance.hpp"
#include "teamai/optimizer.hpp"
#include "teamai/sim.hpp"
#include "teamai/star.hpp"
#include "teamai/task.hpp"
#include "teamai/verify.hpp"

namespace py = pybind11;
using namespace teamai;

namespace {

// One play with a fresh counter stream; keeps the python surface free of
// explicit RNG state.
Trace play_once_seeded(const Instance& inst, const ReplacementStrategy& x,
                       const WageSchedule& w, std::optional<int> deviant,
                       std::uint64_t seed, std::uint64_t stream) {
  CounterRng rng(seed, stream);
  return play_once(inst, x, w, deviant, rng);
}

}  // namespace

PYBIND11_MODULE(_teamai, m) {
  m.doc() =
      "Optimal AI replacement strategies, incentive-compatible wages, and "
      "expected compensation costs for sequential teams with peer monitoring";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& err) {
      PyErr_SetString(PyExc_ValueError, err.what());
    }
  });

  py::class_<Instance>(m, "Instance")
      .def_property_readonly("n", &Instance::n)
      .def_property_readonly("c", &Instance::c)
      .def_property_readonly("p", [](const Instance& inst) { return inst.p(); })
      .def("__repr__", [](const Instance& inst) {
        return "Instance(n=" + std::to_string(inst.n()) + ")";
      });

  py::class_<ReplacementStrategy>(m, "ReplacementStrategy")
      .def_property_readonly(
          "x", [](const ReplacementStrategy& s) { return s.x(); })
      .def_property_readonly("capacity", &ReplacementStrategy::capacity)
      .def("total", &ReplacementStrategy::total);

  py::class_<TaskStrategy>(m, "TaskStrategy")
      .def_readonly("x", &TaskStrategy::x)
      .def_readonly("capacity", &TaskStrategy::capacity)
      .def("total", &TaskStrategy::total);

  py::class_<WageSchedule>(m, "WageSchedule")
      .def_readonly("w", &WageSchedule::w)
      .def("present", &WageSchedule::present, py::arg("i"))
      .def("value", &WageSchedule::value, py::arg("i"));

  py::class_<CostBreakdown>(m, "CostBreakdown")
      .def_readonly("ai_cost", &CostBreakdown::ai_cost)
      .def_readonly("wage_cost", &CostBreakdown::wage_cost)
      .def_readonly("total", &CostBreakdown::total)
      .def_readonly("per_worker", &CostBreakdown::per_worker);

  py::class_<GradientDecomposition>(m, "GradientDecomposition")
      .def_readonly("direct_saving", &GradientDecomposition::direct_saving)
      .def_readonly("direct_incentive", &GradientDecomposition::direct_incentive)
      .def_readonly("indirect_incentive",
                    &GradientDecomposition::indirect_incentive)
      .def_readonly("total", &GradientDecomposition::total);

  py::class_<EquilibriumEntry>(m, "EquilibriumEntry")
      .def_readonly("worker", &EquilibriumEntry::worker)
      .def_readonly("replaced", &EquilibriumEntry::replaced)
      .def_readonly("on_path_slack", &EquilibriumEntry::on_path_slack)
      .def_readonly("on_path_pass", &EquilibriumEntry::on_path_pass)
      .def_readonly("off_path_applicable",
                    &EquilibriumEntry::off_path_applicable)
      .def_readonly("off_path_slack", &EquilibriumEntry::off_path_slack)
      .def_readonly("off_path_pass", &EquilibriumEntry::off_path_pass);

  py::class_<EquilibriumReport>(m, "EquilibriumReport")
      .def_readonly("entries", &EquilibriumReport::entries)
      .def_readonly("tol", &EquilibriumReport::tol)
      .def_readonly("pass_", &EquilibriumReport::pass)
      .def_property_readonly("ok",
                             [](const EquilibriumReport& r) { return r.pass; });

  py::class_<PureStrategyCosts>(m, "PureStrategyCosts")
      .def_readonly("none", &PureStrategyCosts::none)
      .def_readonly("replace_worker", &PureStrategyCosts::replace_worker)
      .def("min_cost", &PureStrategyCosts::min_cost);

  py::enum_<SolveMethod>(m, "SolveMethod")
      .value("ClosedForm", SolveMethod::ClosedForm)
      .value("GridRefine", SolveMethod::GridRefine)
      .value("Enumeration", SolveMethod::Enumeration);

  py::class_<SolverDiagnostics>(m, "SolverDiagnostics")
      .def_readonly("grid_step", &SolverDiagnostics::grid_step)
      .def_readonly("grid_points", &SolverDiagnostics::grid_points)
      .def_readonly("refine_passes", &SolverDiagnostics::refine_passes)
      .def_readonly("heuristic", &SolverDiagnostics::heuristic)
      .def_readonly("front_at_zero", &SolverDiagnostics::front_at_zero)
      .def_readonly("tie_set", &SolverDiagnostics::tie_set)
      .def_readonly("notes", &SolverDiagnostics::notes);

  py::class_<Optimum>(m, "Optimum")
      .def_readonly("strategy", &Optimum::strategy)
      .def_readonly("wages", &Optimum::wages)
      .def_readonly("cost", &Optimum::cost)
      .def_readonly("utilization", &Optimum::utilization)
      .def_readonly("method", &Optimum::method)
      .def_readonly("diagnostics", &Optimum::diagnostics);

  py::class_<UtilizationCondition>(m, "UtilizationCondition")
      .def_readonly("underutilize", &UtilizationCondition::underutilize)
      .def_readonly("margin", &UtilizationCondition::margin);

  py::class_<GapReport>(m, "GapReport")
      .def_readonly("gap_no_ai", &GapReport::gap_no_ai)
      .def_readonly("gap_at_x", &GapReport::gap_at_x)
      .def_readonly("ratio", &GapReport::ratio);

  py::class_<PayoffReport>(m, "PayoffReport")
      .def_readonly("payoffs", &PayoffReport::payoffs)
      .def_readonly("baseline", &PayoffReport::baseline)
      .def_readonly("deltas", &PayoffReport::deltas)
      .def_readonly("ordering", &PayoffReport::ordering);

  py::class_<TaskGradientReport>(m, "TaskGradientReport")
      .def_readonly("partials", &TaskGradientReport::partials)
      .def_readonly("all_positive", &TaskGradientReport::all_positive);

  py::class_<StarCondition>(m, "StarCondition")
      .def_readonly("holds", &StarCondition::holds)
      .def_readonly("margin", &StarCondition::margin);

  py::class_<StarSolution>(m, "StarSolution")
      .def_readonly("strategy", &StarSolution::strategy)
      .def_readonly("wages", &StarSolution::wages)
      .def_readonly("cost", &StarSolution::cost)
      .def_readonly("canonical", &StarSolution::canonical)
      .def_readonly("condition_margin", &StarSolution::condition_margin)
      .def_readonly("split_spread", &StarSolution::split_spread)
      .def_readonly("heuristic", &StarSolution::heuristic);

  py::class_<Trace>(m, "Trace")
      .def_readonly("replaced", &Trace::replaced)
      .def_readonly("efforts", &Trace::efforts)
      .def_readonly("signals", &Trace::signals)
      .def_readonly("success", &Trace::success)
      .def_readonly("principal_cost", &Trace::principal_cost)
      .def_readonly("worker_payoffs", &Trace::worker_payoffs);

  py::class_<Estimate>(m, "Estimate")
      .def_readonly("mean", &Estimate::mean)
      .def_readonly("std_error", &Estimate::std_error);

  py::class_<SimReport>(m, "SimReport")
      .def_readonly("trials", &SimReport::trials)
      .def_readonly("seed", &SimReport::seed)
      .def_readonly("deviant", &SimReport::deviant)
      .def_readonly("success_rate", &SimReport::success_rate)
      .def_readonly("mean_cost", &SimReport::mean_cost)
      .def_readonly("mean_payoffs", &SimReport::mean_payoffs)
      .def_readonly("deviant_human_trials", &SimReport::deviant_human_trials)
      .def_readonly("deviant_human_success", &SimReport::deviant_human_success)
      .def_readonly("pair_human_trials", &SimReport::pair_human_trials)
      .def_readonly("pair_human_success", &SimReport::pair_human_success);

  py::class_<SuiteResult>(m, "SuiteResult")
      .def_readonly("name", &SuiteResult::name)
      .def_readonly("title", &SuiteResult::title)
      .def_readonly("pass_", &SuiteResult::pass)
      .def_readonly("checks", &SuiteResult::checks)
      .def_readonly("failures", &SuiteResult::failures)
      .def_readonly("detail", &SuiteResult::detail)
      .def_readonly("seconds", &SuiteResult::seconds);

  // environment
  m.def("validate_instance", &validate_instance, py::arg("n"), py::arg("c"),
        py::arg("p"));
  m.def("oring_production", &oring_production, py::arg("alpha"), py::arg("n"));
  m.def("oring_instance", &oring_instance, py::arg("alpha"), py::arg("n") = 3,
        py::arg("c") = 1.0);
  m.def("validate_strategy", &validate_strategy, py::arg("x"),
        py::arg("capacity") = 1.0);
  m.def("no_replacement", &no_replacement, py::arg("n"),
        py::arg("capacity") = 1.0);

  // chain incentives
  m.def("shirk_success_rate", &shirk_success_rate, py::arg("inst"),
        py::arg("x"), py::arg("i"));
  m.def("offpath_shirk_rate", &offpath_shirk_rate, py::arg("inst"),
        py::arg("x"), py::arg("i"));
  m.def("optimal_wages", &optimal_wages, py::arg("inst"), py::arg("x"));
  m.def("expected_cost", &expected_cost, py::arg("inst"), py::arg("x"));
  m.def("cost_gradient", &cost_gradient, py::arg("inst"), py::arg("x"),
        py::arg("i"));
  m.def("pure_strategy_costs", &pure_strategy_costs, py::arg("inst"));
  m.def("verify_trigger_equilibrium", &verify_trigger_equilibrium,
        py::arg("inst"), py::arg("x"), py::arg("w"), py::arg("tol") = 1e-9);
  m.def("strategic_ai_cost", &strategic_ai_cost, py::arg("inst"), py::arg("x"));

  // optimizers and analyses
  m.def("solve_oring", &solve_oring, py::arg("alpha"), py::arg("c") = 1.0);
  m.def("utilization_condition", &utilization_condition, py::arg("inst"));
  m.def("solve_chain_n3", &solve_chain_n3, py::arg("inst"));
  m.def("solve_chain_general", &solve_chain_general, py::arg("inst"),
        py::arg("grid_step") = 0.005);
  m.def("family_cost", &family_cost, py::arg("inst"), py::arg("rho"));
  m.def("solve_strategic", &solve_strategic, py::arg("inst"));
  m.def("wage_gap_report", &wage_gap_report, py::arg("inst"), py::arg("x"));
  m.def("payoff_report", &payoff_report, py::arg("inst"), py::arg("x"));
  m.def("front_payoff_alpha_threshold", &front_payoff_alpha_threshold);

  // task-level substitution
  m.def("validate_task_strategy", &validate_task_strategy, py::arg("x"),
        py::arg("capacity"));
  m.def("task_shirk_rate", &task_shirk_rate, py::arg("inst"), py::arg("x"),
        py::arg("i"));
  m.def("task_wages", &task_wages, py::arg("inst"), py::arg("x"));
  m.def("task_expected_cost", &task_expected_cost, py::arg("inst"),
        py::arg("x"));
  m.def("interior_gradient_check", &interior_gradient_check, py::arg("inst"),
        py::arg("x"));
  m.def("solve_task_based", &solve_task_based, py::arg("inst"),
        py::arg("capacity"));

  // star topology
  m.def("star_shirk_rate", &star_shirk_rate, py::arg("inst"), py::arg("x"),
        py::arg("i"));
  m.def("star_expected_cost", &star_expected_cost, py::arg("inst"),
        py::arg("x"));
  m.def("star_wages", &star_wages, py::arg("inst"), py::arg("x"));
  m.def("star_condition", &star_condition, py::arg("inst"));
  m.def("solve_star", &solve_star, py::arg("inst"));

  // simulation
  m.def("domino_trace", &domino_trace, py::arg("inst"), py::arg("replaced_set"),
        py::arg("first_shirker") = std::nullopt);
  m.def("play_once", &play_once_seeded, py::arg("inst"), py::arg("x"),
        py::arg("w"), py::arg("deviant") = std::nullopt, py::arg("seed") = 42,
        py::arg("stream") = 0);
  m.def("monte_carlo", &monte_carlo, py::arg("inst"), py::arg("x"),
        py::arg("w"), py::arg("trials"), py::arg("seed"),
        py::arg("deviant") = std::nullopt);

  // verification suites
  m.def("verify_suite_names",
        [] { return verify_suite_names(); });
  m.def("run_verify_suite", &run_verify_suite, py::arg("name"),
        py::arg("seed") = kDefaultVerifySeed);
  m.def("run_all_verify_suites", &run_all_verify_suites,
        py::arg("seed") = kDefaultVerifySeed);
}
