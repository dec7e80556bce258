// Copyright 2026 The nhcd Authors.
// SPDX-License-Identifier: Apache-2.0

#include "nhcd/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>

#include <fmt/format.h>

#include "nhcd/adiabatic.hpp"
#include "nhcd/cd.hpp"

namespace nhcd {

std::shared_ptr<const Schedule> build_schedule(const ExperimentConfig& cfg) {
  if (cfg.model == "custom-matrix") {
    const Matrix h0 = cfg.custom_matrix, h1 = cfg.custom_rate;
    return std::make_shared<CallbackSchedule>(
        *cfg.window, [h0, h1](double t) { return Matrix(h0 + t * h1); }, cfg.custom_symmetry);
  }
  CaseSchedule ps = case_schedule(parse_model_case(cfg.model));
  if (cfg.window) ps.window = *cfg.window;
  return make_model(ps);
}

double default_step(const ExperimentConfig& cfg) {
  if (cfg.step) return *cfg.step;
  if (cfg.model == "custom-matrix") return 1e-4 * cfg.window->length();
  return 1e-3 * case_schedule(parse_model_case(cfg.model)).T;
}

HamiltonianFn build_drive(const ExperimentConfig& cfg, const std::shared_ptr<const Schedule>& s) {
  if (cfg.drive == Drive::Bare) return [s](double t) { return s->hamiltonian(t); };
  const bool total = cfg.drive == Drive::FullCd;
  if (cfg.cd_source == CdSource::Analytic) {
    auto model = std::dynamic_pointer_cast<const ModelBundle>(s);
    if (!model) fail(ErrorCode::ConfigError, "analytic CD needs a model schedule");
    return [model, total](double t) {
      CDBundle b = model->analytic_cd(t);
      return total ? b.Htotal : b.HcdOnly;
    };
  }
  return [s, total](double t) {
    CDBundle b;
    const auto sym = s->symmetry(t);
    if (sym && sym->kind == SymmetryKind::Pseudo)
      b = cd_pseudo(*s, t);
    else if (sym)
      b = cd_antipseudo(*s, t);
    else {
      const EigenPath p = eigenpath_derivative(*s, t);
      b = cd_generic(p.es, p.d_rights);
    }
    return total ? b.Htotal : b.HcdOnly;
  };
}

namespace {

Vector initial_state(const ExperimentConfig& cfg, const Schedule& s) {
  const int dim = s.dim();
  switch (cfg.initial) {
    case InitialKind::Eigenstate:
      if (cfg.initial_index >= dim) fail(ErrorCode::ConfigError, "eigenstate index out of range");
      return s.eigensystem(s.window().t0).rights.col(cfg.initial_index);
    case InitialKind::BareState: {
      if (cfg.initial_index >= dim) fail(ErrorCode::ConfigError, "bare state index out of range");
      Vector v = Vector::Zero(dim);
      v[cfg.initial_index] = 1.0;
      return v;
    }
    case InitialKind::Explicit:
      return cfg.amplitudes;
  }
  return {};
}

void check_thresholds(RunReport& rep, const ExperimentConfig& cfg, const Trajectory& traj) {
  auto need = [&](const std::string& key, bool have, double value, bool at_least, double bound) {
    if (!have) {
      rep.failures.push_back(fmt::format("{}: quantity unavailable", key));
      return;
    }
    const bool ok = at_least ? value >= bound : value <= bound;
    if (!ok) rep.failures.push_back(fmt::format("{}: {:.12g} vs bound {:.12g}", key, value, bound));
  };
  double norm_dev = 0.0;
  for (double n : traj.norms) norm_dev = std::max(norm_dev, std::abs(n - 1.0));
  for (const auto& [key, bound] : cfg.thresholds) {
    if (key == "min_fidelity_u") need(key, rep.has_fidelity_u, rep.min_fidelity_u, true, bound);
    else if (key == "min_fidelity_plain") need(key, rep.has_fidelity, rep.min_fidelity_plain, true, bound);
    else if (key == "max_norm_deviation") need(key, true, norm_dev, false, bound);
    else if (key == "max_eta") need(key, rep.max_eta.has_value(), rep.max_eta.value_or(0.0), false, bound);
    else {
      const Eigen::Index k = key.back() - '1';
      const bool have = k >= 0 && k < rep.final_populations.size();
      need(key, have, have ? rep.final_populations[k] : 0.0, true, bound);
    }
  }
  if (traj.truncated && !cfg.thresholds.empty()) rep.failures.push_back("trajectory truncated by norm overflow");
}

}  // namespace

RunResult run_experiment(const ExperimentConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  RunResult res;
  res.config = cfg;
  res.schedule = build_schedule(cfg);
  const Schedule& s = *res.schedule;
  const Window w = s.window();
  const auto grid = grid_with_step(w.t0, w.t1, default_step(cfg));
  res.drive = build_drive(cfg, res.schedule);

  IntegrateOptions io;
  io.method = cfg.method;
  res.trajectory = integrate(res.drive, initial_state(cfg, s), grid, io);
  Trajectory& traj = res.trajectory;

  std::optional<int> ref_index;
  if (cfg.initial == InitialKind::Eigenstate) ref_index = cfg.initial_index;
  if (cfg.reference_index) ref_index = cfg.reference_index;
  std::optional<MatrixFn> u;
  if (s.symmetry(w.t0)) u = [&s](double t) { return s.symmetry(t)->U; };
  if (ref_index) {
    if (*ref_index >= s.dim()) fail(ErrorCode::ConfigError, "reference index out of range");
    const Trajectory ref = adiabatic_reference(s, grid, *ref_index, cfg.drive == Drive::CdOnly);
    observables(traj, u, &ref);
  } else {
    observables(traj);
  }
  project_phase_decomposition(traj, res.drive);

  RunReport& rep = res.report;
  rep.name = cfg.name;
  rep.truncated = traj.truncated;
  rep.points = traj.size();
  auto range = [](const std::vector<double>& v, double& lo, double& hi) {
    lo = *std::min_element(v.begin(), v.end());
    hi = *std::max_element(v.begin(), v.end());
  };
  rep.has_fidelity = !traj.fidelity_plain.empty();
  rep.has_fidelity_u = !traj.fidelity_u.empty();
  if (rep.has_fidelity) range(traj.fidelity_plain, rep.min_fidelity_plain, rep.max_fidelity_plain);
  if (rep.has_fidelity_u) range(traj.fidelity_u, rep.min_fidelity_u, rep.max_fidelity_u);
  rep.final_populations = traj.populations.back();
  rep.final_populations_renorm = traj.populations_renorm.back();
  range(traj.norms, rep.norm_min, rep.norm_max);
  range(traj.alpha, rep.alpha_min, rep.alpha_max);
  rep.alpha_rate_mismatch = traj.alpha_rate_mismatch;
  for (std::size_t k = 0; k < traj.size(); ++k)
    rep.max_alpha_norm_error =
        std::max(rep.max_alpha_norm_error, std::abs(std::exp(2.0 * traj.alpha[k]) - traj.norms[k]) / traj.norms[k]);
  if (cfg.compute_metric) rep.max_eta = max_adiabatic_metric(s);
  check_thresholds(rep, cfg, traj);
  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

std::string trajectory_csv_header(int dim) {
  std::string h = "t";
  for (int k = 1; k <= dim; ++k) h += fmt::format(",re_c{0},im_c{0}", k);
  for (int k = 1; k <= dim; ++k) h += fmt::format(",p{}", k);
  for (int k = 1; k <= dim; ++k) h += fmt::format(",p{}_renorm", k);
  h += ",norm,fidelity_u,fidelity_plain,alpha,beta";
  return h;
}

void write_trajectory_csv(const Trajectory& traj, std::ostream& out) {
  const int dim = traj.dim();
  const double nan = std::nan("");
  auto at = [nan](const std::vector<double>& v, std::size_t k) { return k < v.size() ? v[k] : nan; };
  out << trajectory_csv_header(dim) << '\n';
  fmt::memory_buffer buf;
  for (std::size_t k = 0; k < traj.size(); ++k) {
    buf.clear();
    fmt::format_to(std::back_inserter(buf), "{:.12g}", traj.times[k]);
    for (int j = 0; j < dim; ++j)
      fmt::format_to(std::back_inserter(buf), ",{:.12g},{:.12g}", traj.states[k][j].real(), traj.states[k][j].imag());
    for (int j = 0; j < dim; ++j) fmt::format_to(std::back_inserter(buf), ",{:.12g}", traj.populations[k][j]);
    for (int j = 0; j < dim; ++j) fmt::format_to(std::back_inserter(buf), ",{:.12g}", traj.populations_renorm[k][j]);
    fmt::format_to(std::back_inserter(buf), ",{:.12g},{:.12g},{:.12g},{:.12g},{:.12g}\n", traj.norms[k],
                   at(traj.fidelity_u, k), at(traj.fidelity_plain, k), at(traj.alpha, k), at(traj.beta, k));
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  }
}

std::string format_report(const RunReport& rep, const ExperimentConfig& cfg) {
  std::string s;
  auto line = [&s](std::string_view key, const auto& value) { s += fmt::format("{}: {}\n", key, value); };
  auto num = [](double x) { return fmt::format("{:.12g}", x); };
  line("name", rep.name);
  line("model", cfg.model);
  line("drive", to_string(cfg.drive));
  line("method", to_string(cfg.method));
  line("points", rep.points);
  line("truncated", rep.truncated ? "true" : "false");
  if (rep.has_fidelity_u) {
    line("min_fidelity_u", num(rep.min_fidelity_u));
    line("max_fidelity_u", num(rep.max_fidelity_u));
  }
  if (rep.has_fidelity) {
    line("min_fidelity_plain", num(rep.min_fidelity_plain));
    line("max_fidelity_plain", num(rep.max_fidelity_plain));
  }
  for (Eigen::Index k = 0; k < rep.final_populations.size(); ++k)
    line(fmt::format("final_p{}", k + 1), num(rep.final_populations[k]));
  for (Eigen::Index k = 0; k < rep.final_populations_renorm.size(); ++k)
    line(fmt::format("final_p{}_renorm", k + 1), num(rep.final_populations_renorm[k]));
  line("norm_min", num(rep.norm_min));
  line("norm_max", num(rep.norm_max));
  line("alpha_min", num(rep.alpha_min));
  line("alpha_max", num(rep.alpha_max));
  line("alpha_rate_mismatch", num(rep.alpha_rate_mismatch));
  line("alpha_norm_error", num(rep.max_alpha_norm_error));
  if (rep.max_eta) {
    line("max_eta", num(*rep.max_eta));
    // 0.1 is a reporting convention only
    line("adiabatic", *rep.max_eta > 0.1 ? "false" : "true");
  }
  line("wall_seconds", fmt::format("{:.3f}", rep.wall_seconds));
  for (const auto& f : rep.failures) line("threshold_failure", f);
  line("status", rep.passed() ? "pass" : "fail");
  return s;
}

std::vector<std::filesystem::path> write_outputs(const RunResult& r, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const auto csv = dir / (r.config.name + ".csv");
  const auto sched = dir / (r.config.name + "_schedule.csv");
  const auto report = dir / (r.config.name + "_report.txt");
  {
    std::ofstream out(csv);
    if (!out) fail(ErrorCode::ConfigError, fmt::format("cannot write {}", csv.string()));
    write_trajectory_csv(r.trajectory, out);
  }
  {
    std::ofstream out(sched);
    const auto& s = *r.schedule;
    const auto& times = r.trajectory.times;
    const auto keys = s.parameters(times.front());
    out << "t";
    for (const auto& kv : keys) out << ',' << kv.first;
    for (const auto& kv : s.parameter_rates(times.front())) out << ",d_" << kv.first;
    out << ",h_norm\n";
    for (double t : times) {
      out << fmt::format("{:.12g}", t);
      for (const auto& kv : s.parameters(t)) out << fmt::format(",{:.12g}", kv.second);
      for (const auto& kv : s.parameter_rates(t)) out << fmt::format(",{:.12g}", kv.second);
      out << fmt::format(",{:.12g}\n", s.hamiltonian(t).norm());
    }
  }
  {
    std::ofstream out(report);
    out << format_report(r.report, r.config);
  }
  return {csv, sched, report};
}

}  // namespace nhcd
