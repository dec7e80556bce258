// Copyright 2026 The nhcd Authors.
// SPDX-License-Identifier: Apache-2.0

// nhcd: run, sweep, plot and verify counterdiabatic experiments.
//
// Exit codes: 0 pass, 2 threshold failure, 3 config/usage error, 4 numeric error.

#include <CLI11.hpp>
#include <fmt/format.h>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "nhcd/adiabatic.hpp"
#include "nhcd/cd.hpp"
#include "nhcd/config.hpp"
#include "nhcd/experiment.hpp"
#include "nhcd/plot.hpp"
#include "nhcd/sweep.hpp"

namespace {

constexpr int kPass = 0, kThreshold = 2, kConfig = 3, kNumeric = 4;

struct Common {
  std::string out;
  bool seedless = false;
};

// --out beats NHCD_OUT_DIR, which beats whatever the config says.
std::filesystem::path output_dir(const Common& c, const std::string& from_config) {
  if (!c.out.empty()) return c.out;
  if (const char* env = std::getenv("NHCD_OUT_DIR"); env && *env) return env;
  return from_config;
}

void add_common(CLI::App* app, Common& c) {
  app->add_option("--out", c.out, "output directory (overrides NHCD_OUT_DIR and the config)");
  app->add_flag("--seedless", c.seedless, "assert no RNG is used (prints rng: none)");
}

// Nothing in nhcd draws random numbers; --seedless records that promise.
void note_seedless(const Common& c) {
  if (c.seedless) std::cout << "rng: none\n";
}

nhcd::ExperimentConfig load_with_overrides(const std::string& path, const std::string& step,
                                           const std::string& window) {
  nhcd::ExperimentConfig cfg = nhcd::load_config(path);
  if (!step.empty()) {
    double v = 0.0;
    try {
      v = std::stod(step);
    } catch (const std::exception&) {
      nhcd::fail(nhcd::ErrorCode::ConfigError, fmt::format("--step: not a number '{}'", step));
    }
    if (!(v > 0.0)) nhcd::fail(nhcd::ErrorCode::ConfigError, "--step must be positive");
    cfg.step = v;
  }
  if (!window.empty()) cfg.window = nhcd::parse_window(window);
  return cfg;
}

int cmd_run(const std::string& config, const std::string& step, const std::string& window, const Common& c) {
  const auto cfg = load_with_overrides(config, step, window);
  const auto r = nhcd::run_experiment(cfg);
  const auto paths = nhcd::write_outputs(r, output_dir(c, cfg.out_dir));
  std::cout << nhcd::format_report(r.report, cfg);
  note_seedless(c);
  for (const auto& p : paths) std::cout << "wrote: " << p.string() << '\n';
  return r.report.passed() ? kPass : kThreshold;
}

int cmd_sweep(const std::string& model, std::vector<double> range, std::size_t samples, const std::string& name,
              const Common& c) {
  if (range.size() != 2 || !(range[1] > range[0]))
    nhcd::fail(nhcd::ErrorCode::ConfigError, "--range needs lo < hi");
  if (samples < 2) nhcd::fail(nhcd::ErrorCode::ConfigError, "--samples must be >= 2");
  const auto table = nhcd::spectrum_sweep(nhcd::parse_sweep_model(model), range[0], range[1], samples);
  const auto dir = output_dir(c, "out");
  std::filesystem::create_directories(dir);
  const auto path = dir / (name + ".csv");
  std::ofstream out(path);
  if (!out) nhcd::fail(nhcd::ErrorCode::ConfigError, fmt::format("cannot write {}", path.string()));
  nhcd::write_sweep_csv(table, out);
  std::size_t flagged = 0;
  for (const auto& row : table.rows) flagged += !row.flag.empty();
  std::cout << fmt::format("model: {}\nsamples: {}\nflagged: {}\n", model, table.rows.size(), flagged);
  note_seedless(c);
  std::cout << "wrote: " << path.string() << '\n';
  return kPass;
}

int cmd_plot(const std::vector<std::string>& csvs, const std::string& style, const std::string& name,
             const Common& c) {
  std::vector<std::filesystem::path> paths(csvs.begin(), csvs.end());
  const auto dir = output_dir(c, "out");
  const auto script = dir / (name + ".py");
  const auto image = dir / (name + ".png");
  if (!paths.empty()) std::filesystem::create_directories(dir);
  nhcd::emit_plots(paths, nhcd::parse_plot_style(style), script, image);
  note_seedless(c);
  std::cout << "wrote: " << script.string() << '\n';
  return kPass;
}

// Residual of i d/dt psi_ref = H psi_ref for the configured CD drive, with the
// reference the adiabatic state of the configured eigenstate.
int cmd_verify(const std::string& config, const std::string& step, const std::string& window, double tol,
               const Common& c) {
  auto cfg = load_with_overrides(config, step, window);
  if (cfg.initial != nhcd::InitialKind::Eigenstate)
    nhcd::fail(nhcd::ErrorCode::ConfigError, "verify needs initial_state = eigenstate-N");
  if (cfg.drive == nhcd::Drive::Bare) cfg.drive = nhcd::Drive::FullCd;
  const auto s = nhcd::build_schedule(cfg);
  const auto h = nhcd::build_drive(cfg, s);
  const nhcd::Window w = s->window();
  const double dt = nhcd::default_step(cfg);
  const auto coarse_grid = nhcd::grid_with_step(w.t0, w.t1, dt);
  const auto fine_grid = nhcd::grid_with_step(w.t0, w.t1, 0.5 * dt);
  const bool drop = cfg.drive == nhcd::Drive::CdOnly;
  const auto coarse = nhcd::verify_cd(h, nhcd::adiabatic_reference(*s, coarse_grid, cfg.initial_index, drop));
  const auto fine = nhcd::verify_cd(h, nhcd::adiabatic_reference(*s, fine_grid, cfg.initial_index, drop));
  const double ratio = coarse.max_residual / fine.max_residual;
  std::cout << fmt::format("name: {}\nmodel: {}\ndrive: {}\n", cfg.name, cfg.model, nhcd::to_string(cfg.drive));
  std::cout << fmt::format("step: {:.12g}\nresidual: {:.12g}\nworst_time: {:.12g}\n", dt, coarse.max_residual,
                           coarse.worst_time);
  std::cout << fmt::format("residual_half_step: {:.12g}\nshrink_ratio: {:.6g}\n", fine.max_residual, ratio);
  note_seedless(c);
  const bool ok = coarse.max_residual <= tol;
  std::cout << fmt::format("tolerance: {:.3g}\nstatus: {}\n", tol, ok ? "pass" : "fail");
  return ok ? kPass : kThreshold;
}

int code_for(nhcd::ErrorCode e) {
  return e == nhcd::ErrorCode::ConfigError || e == nhcd::ErrorCode::SchemaError ? kConfig : kNumeric;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nhcd: counterdiabatic driving for non-Hermitian three-level systems"};
  app.require_subcommand(1);

  Common common;
  std::string config, step, window;

  auto* run = app.add_subcommand("run", "integrate one experiment config and write CSV + report");
  run->add_option("--config", config, "experiment INI file")->required();
  run->add_option("--step", step, "integration step override");
  run->add_option("--window", window, "window override, \"t0, t1\"");
  add_common(run, common);

  std::string sweep_model = "pseudo", sweep_name = "sweep";
  std::vector<double> sweep_range{0.0, 2.0};
  std::size_t sweep_samples = 400;
  auto* sweep = app.add_subcommand("sweep", "eigenvalues against gamma/omega (pseudo) or Omega/gamma (antipseudo)");
  sweep->add_option("--model", sweep_model, "pseudo | antipseudo")->capture_default_str();
  sweep->add_option("--range", sweep_range, "lo hi")->expected(2)->capture_default_str();
  sweep->add_option("--samples", sweep_samples, "number of ratios")->capture_default_str();
  sweep->add_option("--name", sweep_name, "output file stem")->capture_default_str();
  add_common(sweep, common);

  std::vector<std::string> plot_csvs;
  std::string plot_style = "grid", plot_name = "figure";
  auto* plot = app.add_subcommand("plot", "emit a matplotlib script for trajectory/sweep CSVs");
  plot->add_option("csv", plot_csvs, "CSV files written by run or sweep");
  plot->add_option("--style", plot_style, "grid | stacked")->capture_default_str();
  plot->add_option("--name", plot_name, "script/image stem")->capture_default_str();
  add_common(plot, common);

  double verify_tol = 1e-5;
  auto* verify = app.add_subcommand("verify", "check the CD drive reproduces the adiabatic state");
  verify->add_option("--config", config, "experiment INI file")->required();
  verify->add_option("--step", step, "differencing step override");
  verify->add_option("--window", window, "window override, \"t0, t1\"");
  verify->add_option("--tolerance", verify_tol, "max allowed residual")->capture_default_str();
  add_common(verify, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kConfig;
  }

  try {
    if (*run) return cmd_run(config, step, window, common);
    if (*sweep) return cmd_sweep(sweep_model, sweep_range, sweep_samples, sweep_name, common);
    if (*plot) return cmd_plot(plot_csvs, plot_style, plot_name, common);
    if (*verify) return cmd_verify(config, step, window, verify_tol, common);
  } catch (const nhcd::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return code_for(e.code());
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumeric;
  }
  return kConfig;
}
