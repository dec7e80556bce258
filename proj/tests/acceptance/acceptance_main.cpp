// Copyright 2026 The nhcd Authors.
// SPDX-License-Identifier: Apache-2.0

// Acceptance suite: one PASS/FAIL line per criterion, tolerances pinned below.
//
//   acceptance            run all criteria, exit 0 iff every outcome is as listed
//   acceptance --only N   run criterion N, exit 0 iff it passes
//
// Criteria listed in kKnownRed fail for reasons recorded next to them. In the
// full run a known red that starts passing is reported as stale (exit 1).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "nhcd/adiabatic.hpp"
#include "nhcd/cd.hpp"
#include "nhcd/config.hpp"
#include "nhcd/dynamics.hpp"
#include "nhcd/experiment.hpp"
#include "nhcd/linalg.hpp"
#include "nhcd/models.hpp"
#include "nhcd/schedule.hpp"
#include "nhcd/sweep.hpp"
#include "nhcd/symmetry.hpp"

#include "../support/angle_path.hpp"
#include "../support/oracles.hpp"

namespace fs = std::filesystem;
using namespace nhcd;
using C = std::complex<double>;

namespace {

// ---- pinned tolerances ----
constexpr double kSweepTol = 1e-10;
constexpr double kSweepSeconds = 1.0;
constexpr double kFidelityBar = 0.999;
constexpr double kCollapseBar = 0.9;
constexpr double kRunSeconds = 10.0;
constexpr double kFinalP3 = 0.99;
constexpr double kNormBand = 1e-6;
constexpr double kBerryTol = 1e-6;
constexpr double kBerryZeroTol = 1e-8;
constexpr double kCdTol = 1e-8;
constexpr double kResidualTol = 1e-5;
constexpr double kShrink = 4.0;
constexpr double kBiorthTol = 1e-9;
constexpr double kAlphaNormTol = 1e-8;
constexpr double kLossAlphaTol = 1e-10;
constexpr double kHermitianAlphaTol = 1e-9;
constexpr double kSelfNormTol = 1e-9;
constexpr double kSuiteSeconds = 60.0;

// Bare-drive minimum plain fidelity on the pseudo-real case from an
// independent DOP853 integration (tests/oracles/case_runs.py).
constexpr double kBareMinFidelityOracle = 0.7471877186;
constexpr double kOracleAgreement = 1e-6;

const std::map<int, const char*> kKnownRed = {
    {3, "full CD drive tracks psi_0 exactly on the complex branch (F = 1, no overflow); "
        "an independent DOP853 run agrees"},
};

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

ExperimentConfig shipped(const std::string& name) {
  return load_config(std::string(NHCD_CONFIG_DIR) + "/" + name + ".ini");
}

struct TimedRun {
  RunResult r;
  double seconds;
};

TimedRun timed(ExperimentConfig cfg, double step) {
  cfg.step = step;
  cfg.compute_metric = false;
  cfg.thresholds.clear();
  const auto t0 = std::chrono::steady_clock::now();
  auto r = run_experiment(cfg);
  return {std::move(r), seconds_since(t0)};
}

// ---- 1 ----
Outcome ep_spectrum() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto table = spectrum_sweep(SweepModel::Pseudo, 0.0, 2.0, 400);
  const double secs = seconds_since(t0);
  double worst = 0.0, worst_part = 0.0;
  std::size_t flagged = 0;
  for (const auto& row : table.rows) {
    if (!row.flag.empty()) {
      ++flagged;
      continue;
    }
    const double omega = 2.0 / std::sqrt(1.0 + row.ratio * row.ratio), gamma = row.ratio * omega;
    const C e = 0.5 * std::sqrt(C(omega * omega - gamma * gamma, 0.0));
    const std::vector<C> got(row.energies.data(), row.energies.data() + 3);
    worst = std::max(worst, oracle::multiset_distance(got, {0.0, e, -e}));
    for (const C& x : got) worst_part = std::max(worst_part, std::abs(gamma < omega ? x.imag() : x.real()));
  }
  const bool ok = table.rows.size() == 400 && flagged == 0 && worst <= kSweepTol && worst_part <= kSweepTol &&
                  secs < kSweepSeconds;
  return {ok, fmt::format("400 samples, max |E - E_closed| {:.2e}, max wrong-part {:.2e} (tol {:.0e}), {:.3f} s",
                          worst, worst_part, kSweepTol, secs)};
}

// ---- 2 ----
Outcome pseudo_real_case() {
  const double h = 1e-3;  // T = 1
  const auto full = timed(shipped("pseudo_real_full_cd"), h);
  const auto bare = timed(shipped("pseudo_real_bare"), h);
  const auto full_q = timed(shipped("pseudo_real_full_cd"), h / 4);
  const auto bare_q = timed(shipped("pseudo_real_bare"), h / 4);
  // F_U = |<psi|U|psi_0>| is not bounded by 1 and the bare run pushes it
  // above 1, so the bare-vs-CD gap is measured on the normalized fidelity.
  const double margin = full.r.report.min_fidelity_plain - bare.r.report.min_fidelity_plain;
  const double margin_q = full_q.r.report.min_fidelity_plain - bare_q.r.report.min_fidelity_plain;
  const double oracle_gap = std::abs(bare_q.r.report.min_fidelity_plain - kBareMinFidelityOracle);
  const bool ok = full.r.report.min_fidelity_u >= kFidelityBar && margin > 0.0 &&
                  std::abs(margin - margin_q) <= kOracleAgreement && oracle_gap <= kOracleAgreement &&
                  full.seconds < kRunSeconds && bare.seconds < kRunSeconds;
  return {ok, fmt::format("full-CD min F_U {:.9f}; plain min CD {:.9f} vs bare {:.9f}, margin {:.6f} "
                          "(quarter-step {:.6f}, bare vs oracle {:.1e}); {:.2f} s + {:.2f} s",
                          full.r.report.min_fidelity_u, full.r.report.min_fidelity_plain,
                          bare.r.report.min_fidelity_plain, margin, margin_q, oracle_gap, full.seconds,
                          bare.seconds)};
}

// ---- 3 ----
Outcome pseudo_complex_case() {
  const double h = 2e-3;  // T = 2
  const auto cd = timed(shipped("pseudo_complex_cd_only"), h);
  const auto full = timed(shipped("pseudo_complex_full_cd"), h);
  const auto bare = timed(shipped("pseudo_complex_bare"), h);
  auto unstable = [](const RunReport& r) { return r.truncated || r.min_fidelity_plain < kCollapseBar; };
  const bool cd_ok = cd.r.report.min_fidelity_plain >= kFidelityBar;
  const bool ok = cd_ok && unstable(full.r.report) && unstable(bare.r.report) && cd.seconds < kRunSeconds &&
                  full.seconds < kRunSeconds && bare.seconds < kRunSeconds;
  return {ok, fmt::format("cd-only min F {:.9f}; full min F {:.9f} truncated={} max norm {:.4g}; "
                          "bare min F {:.3e} truncated={} max norm {:.4g}",
                          cd.r.report.min_fidelity_plain, full.r.report.min_fidelity_plain,
                          full.r.report.truncated, full.r.report.norm_max, bare.r.report.min_fidelity_plain,
                          bare.r.report.truncated, bare.r.report.norm_max)};
}

// ---- 4 ----
Outcome antipseudo_case() {
  const double h = 5e-3;  // T = 5
  const auto cd = timed(shipped("antipseudo_cd_only"), h);
  const auto bare = timed(shipped("antipseudo_bare"), h);
  // the bar the CD drive has to clear: final P3 and a unit norm throughout
  auto clears = [](const RunReport& r) {
    return r.final_populations[2] >= kFinalP3 && r.norm_min >= 1.0 - kNormBand && r.norm_max <= 1.0 + kNormBand;
  };
  const bool ok = clears(cd.r.report) && !clears(bare.r.report) && cd.seconds < kRunSeconds &&
                  bare.seconds < kRunSeconds;
  return {ok, fmt::format("H1 drive P3 {:.9f} norm [{:.12f}, {:.12f}]; bare P3 {:.6f} norm max {:.6f} "
                          "plain min F {:.6f}",
                          cd.r.report.final_populations[2], cd.r.report.norm_min, cd.r.report.norm_max,
                          bare.r.report.final_populations[2], bare.r.report.norm_max,
                          bare.r.report.min_fidelity_plain)};
}

// ---- 5 ----
// Closed-form connections, pseudo model, real branch. Written out here
// independently of the library copy.
std::array<std::pair<C, C>, 3> closed_connections(double th) {
  const C root = std::sqrt(C(-std::cos(2 * th), 0.0));
  const C a = 1.0 / (std::sin(th) * root), b = C(0, 1) * std::cos(th) / root;
  return {{{0.0, 1.0}, {-a, 1.0 - b}, {a, 1.0 + b}}};
}

Outcome berry_connections() {
  const double lo = std::acos(-1.0) / 4 + 0.1, hi = std::acos(-1.0) / 2;
  const Window w{-0.05, 0.05};
  double worst = 0.0;
  for (int k = 0; k < 10; ++k) {
    const double th = lo + (hi - lo) * (k + 0.5) / 10.0;
    const auto expect = closed_connections(th);
    const auto along_theta = oracle::angle_path(th, 1.0, 0.0, 0.0, w);
    const auto along_phi = oracle::angle_path(th, 0.0, 0.4, 1.0, w);
    for (int n = 0; n < 3; ++n) {
      worst = std::max(worst, std::abs(berry_connection(*along_theta, 0.0, n) - expect[n].first));
      worst = std::max(worst, std::abs(berry_connection(*along_phi, 0.0, n) - expect[n].second));
    }
  }
  double worst_ap = 0.0;
  const auto ap = make_case_model(ModelCase::Antipseudo);
  const auto ap_path = oracle::antipseudo_angle_path(0.3, 0.7, 0.4, 0.5, {-0.5, 0.5});
  for (int k = 0; k <= 20; ++k) {
    const double t = -30.0 + 3.0 * k, s = -0.5 + 0.05 * k;
    for (int n = 0; n < 3; ++n) {
      worst_ap = std::max(worst_ap, std::abs(berry_connection(*ap, t, n)));
      worst_ap = std::max(worst_ap, std::abs(berry_connection(*ap_path, s, n)));
    }
  }
  return {worst <= kBerryTol && worst_ap <= kBerryZeroTol,
          fmt::format("pseudo max |A - A_closed| {:.2e} over 10 theta (tol {:.0e}); antipseudo max |A| {:.2e} "
                      "(tol {:.0e})",
                      worst, kBerryTol, worst_ap, kBerryZeroTol)};
}

// ---- 6 ----
// Closed-form CD matrices, same deal. The CD-only (1,1) entry carries
// theta-dot: with phi-dot there the trace no longer equals the sum of the
// connections.
Matrix closed_h1p(double th, double ph, double thd, double phd) {
  const double c2 = std::cos(2 * th), s2 = std::sin(2 * th), s = std::sin(th);
  const C e = std::exp(C(0, ph));
  const C up = -e * (2 * thd + C(0, 1) * phd * s2) / (2 * std::sqrt(2.0) * c2);
  const C lo = std::conj(e) * (2 * thd - C(0, 1) * phd * s2) / (2 * std::sqrt(2.0) * c2);
  Matrix m(3, 3);
  m << s * s / c2 * phd, up, 0.0, lo, 0.0, up, 0.0, lo, -s * s / c2 * phd;
  return m;
}

Matrix closed_cd_only_p(double th, double ph, double thd, double phd) {
  const double c2 = std::cos(2 * th);
  const C d = C(0, 1) * std::cos(th) / (std::sin(th) * c2) * thd;
  const C off = std::sqrt(2.0) * std::exp(C(0, -ph)) / c2 * thd;
  Matrix m = Matrix::Zero(3, 3);
  m(0, 0) = d;
  m(1, 0) = off;
  m(1, 1) = phd;
  m(2, 1) = off;
  m(2, 2) = 2 * phd - d;
  return m;
}

Matrix closed_h1ap(double th, double ph, double thd, double phd) {
  const double x = std::sin(th) / (2 * std::cos(2 * ph)) * phd, y = std::cos(th) / (2 * std::cos(2 * ph)) * phd;
  Matrix m(3, 3);
  m << 0.0, x, C(0, thd), -x, 0.0, -y, C(0, -thd), y, 0.0;
  return m;
}

Outcome cd_assembly() {
  double worst_h1p = 0.0, worst_only = 0.0, worst_h1ap = 0.0, worst_free = 0.0, phi_variant = 0.0;
  for (auto which : {ModelCase::PseudoReal, ModelCase::PseudoComplex}) {
    const auto m = make_case_model(which);
    const Window w = m->window();
    // gauge-free route: numeric eigensystem through the symmetry construction
    const CallbackSchedule numeric(w, [&](double t) { return m->hamiltonian(t); }, m->symmetry(0.0));
    for (int k = 0; k < 50; ++k) {
      const double t = w.t0 + w.length() * (k + 0.5) / 50.0;
      const auto a = m->angles(t);
      const double th = a.at("theta"), ph = a.at("phi"), thd = a.at("theta_dot"), phd = a.at("phi_dot");
      const CDBundle b = cd_pseudo(*m, t);
      const Matrix h1 = closed_h1p(th, ph, thd, phd);
      const double scale = std::max(1.0, h1.cwiseAbs().maxCoeff());
      worst_h1p = std::max(worst_h1p, oracle::max_abs(b.H1 - h1) / scale);
      worst_free = std::max(worst_free, oracle::max_abs(cd_pseudo(numeric, t).H1 - h1) / scale);
      const Matrix only = closed_cd_only_p(th, ph, thd, phd);
      worst_only = std::max(worst_only, oracle::max_abs(cd_only_pseudo(*m, t) - only) /
                                            std::max(1.0, only.cwiseAbs().maxCoeff()));
      phi_variant = std::max(phi_variant, std::abs(only(0, 0) - C(0, 1) * std::cos(th) /
                                                                   (std::sin(th) * std::cos(2 * th)) * phd));
    }
  }
  {
    const auto m = make_case_model(ModelCase::Antipseudo);
    const Window w = m->window();
    const CallbackSchedule numeric(w, [&](double t) { return m->hamiltonian(t); }, m->symmetry(0.0));
    for (int k = 0; k < 50; ++k) {
      const double t = w.t0 + w.length() * (k + 0.5) / 50.0;
      const auto a = m->angles(t);
      const Matrix h1 = closed_h1ap(a.at("theta"), a.at("phi"), a.at("theta_dot"), a.at("phi_dot"));
      const double scale = std::max(1.0, h1.cwiseAbs().maxCoeff());
      worst_h1ap = std::max(worst_h1ap, oracle::max_abs(cd_antipseudo(*m, t).H1 - h1) / scale);
      worst_free = std::max(worst_free, oracle::max_abs(cd_antipseudo(numeric, t).H1 - h1) / scale);
    }
  }
  const bool ok = std::max({worst_h1p, worst_only, worst_h1ap, worst_free}) <= kCdTol;
  return {ok, fmt::format("50 samples per case: H1 pseudo {:.2e}, CD-only pseudo {:.2e}, H1 antipseudo {:.2e}, "
                          "numeric-gauge H1 {:.2e} (tol {:.0e}); phi-dot (1,1) variant off by up to {:.2g}",
                          worst_h1p, worst_only, worst_h1ap, worst_free, kCdTol, phi_variant)};
}

// ---- 7 ----
Outcome cd_residual() {
  const auto m = make_case_model(ModelCase::PseudoReal);
  const HamiltonianFn h = [&](double t) { return m->analytic_cd(t).Htotal; };
  const Window w = m->window();
  const double step = 1e-3;  // T = 1
  const auto coarse = verify_cd(h, adiabatic_reference(*m, grid_with_step(w.t0, w.t1, step), 0));
  const auto fine = verify_cd(h, adiabatic_reference(*m, grid_with_step(w.t0, w.t1, step / 2), 0));
  const double ratio = coarse.max_residual / fine.max_residual;
  const bool ok = coarse.max_residual <= kResidualTol && ratio >= kShrink;
  return {ok, fmt::format("residual {:.3e} at step {:.0e} (tol {:.0e}); half step {:.3e}; shrink {:.7f} "
                          "(need >= {:.0f}, observed order {:.6f})",
                          coarse.max_residual, step, kResidualTol, fine.max_residual, ratio, kShrink,
                          std::log2(ratio))};
}

// ---- 8 ----
bool well_separated(const Vector& e, double frac) {
  const double scale = e.cwiseAbs().maxCoeff();
  for (int i = 0; i < e.size(); ++i)
    for (int j = i + 1; j < e.size(); ++j)
      if (std::abs(e[i] - e[j]) < frac * scale) return false;
  return true;
}

Outcome biorthonormality() {
  std::mt19937_64 rng(20261016);
  double worst_bi = 0.0, worst_cl = 0.0;
  int done = 0, rejected = 0;
  while (done < 100) {
    const int n = 2 + done % 5;
    const Matrix H = oracle::random_matrix(rng, n);
    if (!well_separated(eig(H).values, 0.05)) {
      ++rejected;
      continue;
    }
    const EigenSystem es = biorthonormal_eigensystem(H);
    const Matrix overlap = es.lefts.adjoint() * es.rights;
    worst_bi = std::max(worst_bi, oracle::max_abs(overlap - Matrix::Identity(n, n)));
    worst_cl = std::max(worst_cl, oracle::max_abs(es.rights * es.lefts.adjoint() - Matrix::Identity(n, n)));
    ++done;
  }
  double worst_pair = 0.0;
  int built = 0;
  while (built < 100) {
    const int n = 2 + built % 5;
    const Matrix U = oracle::random_symmetry(rng, n), K = oracle::random_hermitian(rng, n);
    const bool anti = built % 2 == 1;
    const Matrix H = anti ? Matrix(C(0, 1) * U * K) : Matrix(U * K);
    if (!(anti ? check_antipseudo(H, U) : check_pseudo(H, U)).holds) return {false, "constructed instance fails its symmetry"};
    const Vector e = eig(H).values;
    if (!well_separated(e, 0.05)) continue;
    std::vector<C> a(e.data(), e.data() + n), b;
    for (const C& x : a) b.push_back(anti ? -std::conj(x) : std::conj(x));
    worst_pair = std::max(worst_pair, oracle::multiset_distance(a, b) / std::max(1.0, e.cwiseAbs().maxCoeff()));
    ++built;
  }
  const bool ok = worst_bi <= kBiorthTol && worst_cl <= kBiorthTol && worst_pair <= kBiorthTol;
  return {ok, fmt::format("100 random (dim 2-6, {} rejected as crowded): <l|r> {:.2e}, closure {:.2e}; "
                          "100 constructed pseudo/antipseudo: pair multiset {:.2e} (tol {:.0e})",
                          rejected, worst_bi, worst_cl, worst_pair, kBiorthTol)};
}

// ---- 9 ----
const std::vector<std::string> kShippedConfigs = {
    "pseudo_real_full_cd", "pseudo_real_bare",   "pseudo_complex_cd_only", "pseudo_complex_full_cd",
    "pseudo_complex_bare", "antipseudo_cd_only", "antipseudo_bare",        "custom_rotation"};

double alpha_norm_error(const Trajectory& tr) {
  double worst = 0.0;
  for (std::size_t k = 0; k < tr.size(); ++k)
    worst = std::max(worst, std::abs(std::exp(2 * tr.alpha[k]) - tr.norms[k]) / std::max(1.0, tr.norms[k]));
  return worst;
}

Outcome phase_decomposition() {
  double worst_emitted = 0.0;
  for (const auto& name : kShippedConfigs) {
    auto cfg = shipped(name);
    cfg.compute_metric = false;
    worst_emitted = std::max(worst_emitted, alpha_norm_error(run_experiment(cfg).trajectory));
  }
  const auto grid = uniform_grid(0.0, 5.0, 5000);
  const double kappa = 0.7;
  const HamiltonianFn loss = [&](double) { return Matrix(C(0, -kappa) * Matrix::Identity(3, 3)); };
  Vector psi0(3);
  psi0 << 1.0, C(0, 1), 0.5;
  psi0 /= psi0.norm();
  Trajectory tl = integrate(loss, psi0, grid);
  observables(tl);
  project_phase_decomposition(tl, loss);
  double worst_loss = 0.0;
  for (std::size_t k = 0; k < tl.size(); ++k) worst_loss = std::max(worst_loss, std::abs(tl.alpha[k] + kappa * tl.times[k]));

  std::mt19937_64 rng(9);
  const Matrix a = oracle::random_hermitian(rng, 3), b = oracle::random_hermitian(rng, 3);
  const HamiltonianFn herm = [&](double t) { return Matrix(a + std::sin(t) * b); };
  Trajectory th = integrate(herm, psi0, grid);
  observables(th);
  project_phase_decomposition(th, herm);
  double worst_herm = 0.0;
  for (double al : th.alpha) worst_herm = std::max(worst_herm, std::abs(al));
  const bool ok = worst_emitted <= kAlphaNormTol && worst_loss <= kLossAlphaTol && worst_herm <= kHermitianAlphaTol;
  return {ok, fmt::format("{} shipped runs: max |e^(2a) - norm| {:.2e} (tol {:.0e}, relative above norm 1); "
                          "pure loss |a + kt| {:.2e} (tol {:.0e}); Hermitian |a| {:.2e} (tol {:.0e})",
                          kShippedConfigs.size(), worst_emitted, kAlphaNormTol, worst_loss, kLossAlphaTol,
                          worst_herm, kHermitianAlphaTol)};
}

// ---- 10 ----
Outcome self_normalization() {
  const auto m = make_case_model(ModelCase::Antipseudo);
  const Window w = m->window();
  const Matrix U = antipseudo_symmetry_matrix();
  double worst = 0.0;
  bool all = true;
  const auto grid = grid_with_step(w.t0, w.t1, 5e-3);
  for (double t : grid) {
    const auto rep = check_self_normalized(m->hamiltonian(t), U, m->analytic_rights(t).col(0),
                                           m->analytic_eigenvalues(t)[0], SymmetryKind::Antipseudo, kSelfNormTol);
    all = all && rep.self_normalized;
    worst = std::max({worst, rep.residual_real, rep.residual_imag});
  }
  const double th = std::acos(-1.0) / 3;
  const Matrix hp = stirap_hamiltonian(pseudo_pattern(2 * std::sin(th), 2 * std::cos(th), 0.0));
  const auto rp = check_self_normalized(hp, pseudo_symmetry_matrix(0.0), closed_form::pseudo_states(th, 0.0)[0], 0.0,
                                        SymmetryKind::Pseudo, kSelfNormTol);
  const double overlap_gap = std::abs(rp.self_overlap - 2.0);
  const bool ok = all && worst <= kSelfNormTol && !rp.self_normalized && overlap_gap <= kSelfNormTol;
  return {ok, fmt::format("antipseudo psi_0 at {} grid points: worst residual {:.2e} (tol {:.0e}); pseudo psi_0 "
                          "at theta = pi/3 rejected={} with <psi|psi> - 2 = {:.1e}",
                          grid.size(), worst, kSelfNormTol, !rp.self_normalized, overlap_gap)};
}

// ---- 11 ----
std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome determinism(std::chrono::steady_clock::time_point suite_start) {
  const fs::path root = fs::temp_directory_path() / "nhcd_acceptance_determinism";
  fs::remove_all(root);
  std::size_t files = 0, differing = 0;
  for (const auto& name : kShippedConfigs) {
    const auto cfg = shipped(name);
    const auto pa = write_outputs(run_experiment(cfg), root / "a");
    const auto pb = write_outputs(run_experiment(cfg), root / "b");
    for (std::size_t k = 0; k < pa.size(); ++k) {
      if (pa[k].extension() != ".csv") continue;
      ++files;
      if (slurp(pa[k]) != slurp(pb[k])) ++differing;
    }
  }
  fs::remove_all(root);
  const double suite_seconds = seconds_since(suite_start);
  return {suite_seconds < kSuiteSeconds && differing == 0 && files > 0,
          fmt::format("suite wall time {:.2f} s (limit {:.0f} s); {} CSVs written twice, {} differ", suite_seconds,
                      kSuiteSeconds, files, differing)};
}

std::vector<Criterion> criteria() {
  return {
      {1, "ep spectrum sweep", ep_spectrum},
      {2, "pseudo-real: full CD tracks, bare drifts", pseudo_real_case},
      {3, "pseudo-complex: CD-only tracks, full and bare unstable", pseudo_complex_case},
      {4, "antipseudo: H1 transfers 1 -> 3 at unit norm", antipseudo_case},
      {5, "Berry connections vs closed forms", berry_connections},
      {6, "CD assembly vs closed-form matrices", cd_assembly},
      {7, "CD residual and second-order shrink", cd_residual},
      {8, "biorthonormality and spectral pairing", biorthonormality},
      {9, "amplitude/phase decomposition", phase_decomposition},
      {10, "self-normalization", self_normalization},
  };
}

// Returns true when the outcome matches the known-red list.
bool report(int id, const char* name, const Outcome& o) {
  const auto red = kKnownRed.find(id);
  const bool known = red != kKnownRed.end();
  std::string tag = o.pass ? "PASS" : "FAIL";
  if (!o.pass && known) tag += " (known red)";
  if (o.pass && known) tag += " (listed as known red: list is stale)";
  std::cout << fmt::format("[{:>2}] {:<4} {}: {}\n", id, tag, name, o.detail);
  if (!o.pass && known) std::cout << fmt::format("     why: {}\n", red->second);
  std::cout.flush();
  return o.pass != known;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc == 3 && std::strcmp(argv[1], "--only") == 0) only = std::atoi(argv[2]);
  else if (argc != 1) {
    std::cerr << "usage: acceptance [--only N]\n";
    return 64;
  }
  try {
    const auto t0 = std::chrono::steady_clock::now();
    bool expected = true;
    for (const auto& c : criteria()) {
      if (only != 0 && only != 11 && c.id != only) continue;
      const Outcome o = c.run();
      if (only == 11) continue;  // timing run for the suite clock only
      expected = report(c.id, c.name, o) && expected;
      if (only != 0) return o.pass ? 0 : 1;
    }
    const Outcome last = determinism(t0);
    if (only == 11 || only == 0) expected = report(11, "suite wall time and byte-identical CSVs", last) && expected;
    if (only == 11) return last.pass ? 0 : 1;
    std::cout << fmt::format("summary: {} ({} known red)\n", expected ? "as expected" : "UNEXPECTED OUTCOME",
                             kKnownRed.size());
    return expected ? 0 : 1;
  } catch (const std::exception& e) {
    std::cout << "error: " << e.what() << '\n';
    return 1;
  }
}
