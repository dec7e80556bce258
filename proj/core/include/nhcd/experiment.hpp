// Copyright 2026 The nhcd Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef NHCD_EXPERIMENT_HPP
#define NHCD_EXPERIMENT_HPP

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "nhcd/config.hpp"
#include "nhcd/models.hpp"

namespace nhcd {

struct RunReport {
  std::string name;
  bool truncated = false;
  std::size_t points = 0;
  double min_fidelity_u = 0.0, max_fidelity_u = 0.0;
  double min_fidelity_plain = 0.0, max_fidelity_plain = 0.0;
  bool has_fidelity = false, has_fidelity_u = false;
  RealVector final_populations, final_populations_renorm;
  double norm_min = 0.0, norm_max = 0.0;
  double alpha_min = 0.0, alpha_max = 0.0;
  double alpha_rate_mismatch = 0.0;
  double max_alpha_norm_error = 0.0;  // max |e^{2 alpha} - norm| / norm
  std::optional<double> max_eta;
  double wall_seconds = 0.0;
  std::vector<std::string> failures;  // threshold violations
  bool passed() const { return failures.empty(); }
};

struct RunResult {
  ExperimentConfig config;
  Trajectory trajectory;
  RunReport report;
  std::shared_ptr<const Schedule> schedule;
  HamiltonianFn drive;
};

/// Schedule for a config: the analytic model, or H0 + t H1 for custom runs.
std::shared_ptr<const Schedule> build_schedule(const ExperimentConfig& cfg);
/// bare: H(t); full-cd: H0 + H1; cd-only: i sum |dr><l|.
HamiltonianFn build_drive(const ExperimentConfig& cfg, const std::shared_ptr<const Schedule>& s);
double default_step(const ExperimentConfig& cfg);

/// Deterministic given the config; no files are touched.
RunResult run_experiment(const ExperimentConfig& cfg);

/// <dir>/<name>.csv, <name>_schedule.csv, <name>_report.txt. Returns the
/// written paths in that order.
std::vector<std::filesystem::path> write_outputs(const RunResult& r, const std::filesystem::path& dir);

void write_trajectory_csv(const Trajectory& traj, std::ostream& out);
std::string trajectory_csv_header(int dim);
std::string format_report(const RunReport& rep, const ExperimentConfig& cfg);

}  // namespace nhcd

#endif  // NHCD_EXPERIMENT_HPP
