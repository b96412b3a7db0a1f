// Command-line front end: solve, verify, sweep, simulate.
//
// Exit codes: 0 success, 1 verification failure, 2 configuration, range, or
// I/O error.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "teamai/config.hpp"
#include "teamai/report.hpp"
#include "teamai/verify.hpp"

namespace {

int run_solve(const std::string& config_path, const std::string& model_override,
              const std::string& out_path, const std::string& table_path) {
  teamai::Config cfg = teamai::load_config(config_path);
  if (!model_override.empty()) {
    cfg.model = teamai::model_kind_from_name(model_override);
  }
  const teamai::Rendered rendered = teamai::build_solve_report(cfg);
  std::cout << rendered.table;

  const std::string report_target =
      !out_path.empty() ? out_path : cfg.report_path.value_or("");
  if (!report_target.empty()) {
    teamai::write_text_atomic(report_target, rendered.doc.dump(2) + "\n");
    std::cout << "report written to " << report_target << "\n";
  }
  const std::string table_target =
      !table_path.empty() ? table_path : cfg.table_path.value_or("");
  if (!table_target.empty()) {
    teamai::write_text_atomic(table_target, rendered.table);
  }
  return 0;
}

int run_verify(const std::string& suite, std::uint64_t seed) {
  std::vector<teamai::SuiteResult> results;
  if (suite == "all") {
    results = teamai::run_all_verify_suites(seed);
  } else {
    results.push_back(teamai::run_verify_suite(suite, seed));
  }
  bool all_pass = true;
  for (const auto& res : results) {
    all_pass = all_pass && res.pass;
    std::printf("%s %-12s %6lld checks  %5.2fs  %s\n",
                res.pass ? "PASS" : "FAIL", res.name.c_str(),
                static_cast<long long>(res.checks), res.seconds,
                res.pass ? res.title.c_str() : res.detail.c_str());
  }
  if (results.size() > 1) {
    std::printf("%zu/%zu suites passed\n",
                static_cast<std::size_t>(
                    std::count_if(results.begin(), results.end(),
                                  [](const auto& r) { return r.pass; })),
                results.size());
  }
  return all_pass ? 0 : 1;
}

int run_sweep(double alpha_start, double alpha_end, int steps,
              const std::string& out_path) {
  const std::string csv = teamai::sweep_csv(alpha_start, alpha_end, steps);
  teamai::write_text_atomic(out_path, csv);
  std::cout << steps << " rows written to " << out_path << "\n";
  return 0;
}

int run_simulate(const std::string& config_path, std::int64_t trials,
                 std::uint64_t seed, const std::string& out_path) {
  const teamai::Config cfg = teamai::load_config(config_path);
  const teamai::Rendered rendered =
      teamai::build_simulate_report(cfg, trials, seed);
  std::cout << rendered.table;
  const std::string target =
      !out_path.empty() ? out_path : cfg.report_path.value_or("");
  if (!target.empty()) {
    teamai::write_text_atomic(target, rendered.doc.dump(2) + "\n");
    std::cout << "report written to " << target << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Optimal AI replacement, incentive-compatible wages, and expected "
      "compensation costs for sequential teams with peer monitoring"};
  app.require_subcommand(1);

  std::string config_path, model_override, out_path, table_path;
  auto* solve = app.add_subcommand("solve", "solve a model described by a config");
  solve->add_option("--config", config_path, "config file (JSON)")->required();
  solve->add_option("--model", model_override,
                    "override the config model: chain|task|star|strategic");
  solve->add_option("--out", out_path, "write the JSON report here");
  solve->add_option("--table", table_path, "write the plain-text table here");

  std::string suite = "all";
  std::uint64_t seed = teamai::kDefaultVerifySeed;
  auto* verify = app.add_subcommand("verify", "run the verification suites");
  verify->add_option("--suite", suite, "suite name or 'all'");
  verify->add_option("--seed", seed, "seed for the randomized batches");

  double alpha_start = 0.1, alpha_end = 0.9;
  int steps = 81;
  std::string sweep_out;
  auto* sweep = app.add_subcommand(
      "sweep", "sweep the power-law family and write a CSV");
  sweep->add_option("--alpha-start", alpha_start, "first alpha")->required();
  sweep->add_option("--alpha-end", alpha_end, "last alpha")->required();
  sweep->add_option("--steps", steps, "number of rows")->required();
  sweep->add_option("--out", sweep_out, "output CSV path")->required();

  std::string sim_config, sim_out;
  std::int64_t trials = 100000;
  std::uint64_t sim_seed = 42;
  auto* simulate =
      app.add_subcommand("simulate", "Monte Carlo playout of the chain game");
  simulate->add_option("--config", sim_config, "config file (JSON)")->required();
  simulate->add_option("--trials", trials, "number of trials");
  simulate->add_option("--seed", sim_seed, "stream seed");
  simulate->add_option("--out", sim_out, "write the JSON report here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) {
      return run_solve(config_path, model_override, out_path, table_path);
    }
    if (verify->parsed()) return run_verify(suite, seed);
    if (sweep->parsed()) {
      return run_sweep(alpha_start, alpha_end, steps, sweep_out);
    }
    if (simulate->parsed()) {
      return run_simulate(sim_config, trials, sim_seed, sim_out);
    }
  } catch (const teamai::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 0;
}
