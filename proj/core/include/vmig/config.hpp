#pragma once

#include "vmig/harness.hpp"

// Experiment configuration: a JSON object tree merged over the published
// defaults. Field names mirror the domain structs; units are SI. tau and
// deadlines accept the string "inf". Unknown keys are rejected.

namespace vmig {

enum class ExperimentKind {
  single_run,
  sweep_vehicles,
  sweep_size,
  success_rate,
  convergence,
  oracle_check,
};

std::string_view to_string(ExperimentKind kind);
std::optional<ExperimentKind> experiment_from_string(std::string_view name);

/// A fully resolved experiment description: defaults merged with the config
/// file, `--set` overrides and flags, per-experiment fallbacks applied.
struct ExperimentConfig {
  ExperimentKind experiment = ExperimentKind::single_run;
  Algorithm algorithm = Algorithm::local;  // single-run, convergence
  std::vector<Algorithm> algorithms = {Algorithm::mec, Algorithm::tm, Algorithm::como};
  int vehicles = 1;
  std::vector<int> m_list = {20, 40, 60, 80, 100};
  std::vector<double> size_list = {5e6, 15e6, 5e7};
  std::vector<double> tau_list = {1e-3, 1, 2, 5, 10, 20, 50, 100, 200, 320};
  int replications = 10;
  std::uint64_t seed = 1;
  int max_sweeps = 1000;
  TaskSpec task;
  NetworkParams params = NetworkParams::table1();
};

ExperimentConfig default_config();

/// Parses JSON text over the defaults, then applies "a.b.c=value" overrides.
/// Throws ValidationError (naming the constraint or key) on any problem.
ExperimentConfig load_config_text(const std::string& json_text,
                                  const std::vector<std::string>& overrides = {});
ExperimentConfig load_config_file(const std::string& path,
                                  const std::vector<std::string>& overrides = {});

std::string to_json_text(const ExperimentConfig& config);
std::string to_json_text(const NetworkParams& params);
std::string to_json_text(const Scenario& scenario);
Scenario scenario_from_json_text(const std::string& json_text);

}  // namespace vmig
