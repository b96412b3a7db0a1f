#ifndef TEAMAI_CONFIG_HPP
#define TEAMAI_CONFIG_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "teamai/instance.hpp"

namespace teamai {

enum class ModelKind { Chain, Task, Star, Strategic };

const char* model_kind_name(ModelKind kind);
ModelKind model_kind_from_name(const std::string& name);

struct SolverOptions {
  std::optional<double> grid_step;  // unset: resolved from the team size
  double tol = 1e-9;

  bool operator==(const SolverOptions&) const = default;
};

/// Default simplex grid step keeping the scan around a million points.
double default_grid_step(int n);

/// A solve/simulate job description. The production environment is given
/// either as an explicit probability vector or as a power-law alpha, never
/// both. Worker numbers in the file are 1-based (as printed in reports).
struct Config {
  ModelKind model = ModelKind::Chain;
  int n = 3;
  double c = 1.0;
  std::optional<double> oring_alpha;
  std::optional<std::vector<double>> p;
  double capacity = 1.0;
  SolverOptions solver;
  std::optional<std::vector<double>> strategy;  // explicit x, e.g. for simulate
  std::optional<int> deviant;                   // forced deviant, 1-based
  std::optional<std::string> report_path;
  std::optional<std::string> table_path;

  bool operator==(const Config&) const = default;
};

/// Throws Error(ConfigError) with a field-level message on any violation.
Config config_from_json(const nlohmann::json& doc);
nlohmann::json config_to_json(const Config& cfg);
Config load_config(const std::string& path);

/// Builds and validates the Instance described by the config.
Instance instance_from_config(const Config& cfg);

}  // namespace teamai

#endif  // TEAMAI_CONFIG_HPP
