#include "teamai/config.hpp"

#include <fstream>

namespace teamai {

using nlohmann::json;

double default_grid_step(int n) {
  switch (n) {
    case 3: return 1.0 / 200.0;
    case 4: return 1.0 / 50.0;
    case 5: return 1.0 / 20.0;
    default: return 1.0 / 10.0;
  }
}

const char* model_kind_name(ModelKind kind) {
  switch (kind) {
    case ModelKind::Chain: return "chain";
    case ModelKind::Task: return "task";
    case ModelKind::Star: return "star";
    case ModelKind::Strategic: return "strategic";
  }
  return "unknown";
}

ModelKind model_kind_from_name(const std::string& name) {
  if (name == "chain") return ModelKind::Chain;
  if (name == "task") return ModelKind::Task;
  if (name == "star") return ModelKind::Star;
  if (name == "strategic") return ModelKind::Strategic;
  fail(Errc::ConfigError,
       "model: expected one of chain|task|star|strategic, got '" + name + "'");
}

namespace {

[[noreturn]] void bad_field(const std::string& field, const std::string& why) {
  fail(Errc::ConfigError, field + ": " + why);
}

double require_number(const json& doc, const std::string& field) {
  if (!doc.contains(field) || !doc[field].is_number()) {
    bad_field(field, "expected a number");
  }
  return doc[field].get<double>();
}

}  // namespace

Config config_from_json(const json& doc) {
  if (!doc.is_object()) fail(Errc::ConfigError, "config must be a JSON object");
  Config cfg;

  if (doc.contains("model")) {
    if (!doc["model"].is_string()) bad_field("model", "expected a string");
    cfg.model = model_kind_from_name(doc["model"].get<std::string>());
  }

  if (!doc.contains("production") || !doc["production"].is_object()) {
    bad_field("production", "expected an object with 'p' or 'oring_alpha'");
  }
  const json& prod = doc["production"];
  const bool has_p = prod.contains("p");
  const bool has_alpha = prod.contains("oring_alpha");
  if (has_p == has_alpha) {
    bad_field("production", "exactly one of 'p' and 'oring_alpha' must be set");
  }
  if (has_alpha) {
    if (!prod["oring_alpha"].is_number()) {
      bad_field("production.oring_alpha", "expected a number");
    }
    cfg.oring_alpha = prod["oring_alpha"].get<double>();
    cfg.n = doc.contains("n") ? static_cast<int>(require_number(doc, "n")) : 3;
  } else {
    if (!prod["p"].is_array()) bad_field("production.p", "expected an array");
    cfg.p = prod["p"].get<std::vector<double>>();
    const int inferred = static_cast<int>(cfg.p->size()) - 1;
    cfg.n = doc.contains("n") ? static_cast<int>(require_number(doc, "n"))
                              : inferred;
    if (cfg.n != inferred) {
      bad_field("n", "inconsistent with production.p (expected " +
                         std::to_string(inferred) + ")");
    }
  }

  if (doc.contains("c")) cfg.c = require_number(doc, "c");
  if (doc.contains("capacity")) cfg.capacity = require_number(doc, "capacity");

  if (doc.contains("solver")) {
    const json& solver = doc["solver"];
    if (!solver.is_object()) bad_field("solver", "expected an object");
    if (solver.contains("grid_step")) {
      cfg.solver.grid_step = require_number(solver, "grid_step");
    }
    if (solver.contains("tol")) cfg.solver.tol = require_number(solver, "tol");
  }

  if (doc.contains("strategy")) {
    if (!doc["strategy"].is_array()) bad_field("strategy", "expected an array");
    cfg.strategy = doc["strategy"].get<std::vector<double>>();
  }
  if (doc.contains("deviant")) {
    if (!doc["deviant"].is_number_integer()) {
      bad_field("deviant", "expected a worker number (1-based integer)");
    }
    cfg.deviant = doc["deviant"].get<int>();
  }
  if (doc.contains("output")) {
    const json& out = doc["output"];
    if (!out.is_object()) bad_field("output", "expected an object");
    if (out.contains("report")) cfg.report_path = out["report"].get<std::string>();
    if (out.contains("table")) cfg.table_path = out["table"].get<std::string>();
  }

  // Cross-field validation: the instance itself, then the optional strategy.
  const Instance inst = instance_from_config(cfg);
  if (cfg.strategy) {
    if (static_cast<int>(cfg.strategy->size()) != inst.n()) {
      bad_field("strategy", "must list one entry per worker");
    }
    try {
      validate_strategy(*cfg.strategy, cfg.capacity);
    } catch (const Error& err) {
      bad_field("strategy", err.what());
    }
  }
  if (cfg.deviant && (*cfg.deviant < 1 || *cfg.deviant > inst.n())) {
    bad_field("deviant", "worker number out of range");
  }
  return cfg;
}

json config_to_json(const Config& cfg) {
  json doc;
  doc["model"] = model_kind_name(cfg.model);
  doc["n"] = cfg.n;
  doc["c"] = cfg.c;
  if (cfg.oring_alpha) {
    doc["production"] = json{{"oring_alpha", *cfg.oring_alpha}};
  } else {
    doc["production"] = json{{"p", *cfg.p}};
  }
  doc["capacity"] = cfg.capacity;
  json solver{{"tol", cfg.solver.tol}};
  if (cfg.solver.grid_step) solver["grid_step"] = *cfg.solver.grid_step;
  doc["solver"] = solver;
  if (cfg.strategy) doc["strategy"] = *cfg.strategy;
  if (cfg.deviant) doc["deviant"] = *cfg.deviant;
  if (cfg.report_path || cfg.table_path) {
    json out = json::object();
    if (cfg.report_path) out["report"] = *cfg.report_path;
    if (cfg.table_path) out["table"] = *cfg.table_path;
    doc["output"] = out;
  }
  return doc;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ConfigError, "cannot open config file '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& err) {
    fail(Errc::ConfigError, "invalid JSON in '" + path + "': " + err.what());
  }
  return config_from_json(doc);
}

Instance instance_from_config(const Config& cfg) {
  try {
    if (cfg.oring_alpha) {
      return oring_instance(*cfg.oring_alpha, cfg.n, cfg.c);
    }
    return validate_instance(cfg.n, cfg.c, *cfg.p);
  } catch (const Error& err) {
    fail(Errc::ConfigError, std::string("production: ") + err.what());
  }
}

}  // namespace teamai
