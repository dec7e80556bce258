// Copyright 2026 The nhcd Authors.
// SPDX-License-Identifier: Apache-2.0

#include "nhcd/adiabatic.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "nhcd/quadrature.hpp"

namespace nhcd {

namespace {

void check_label(const Schedule& s, int n, const char* who) {
  if (n < 0 || n >= s.dim()) fail(ErrorCode::DimensionMismatch, fmt::format("{}: bad state index {}", who, n));
}

std::vector<double> even_grid(double a, double b, double step) {
  auto n = static_cast<std::size_t>(std::ceil((b - a) / step - 1e-9));
  n = std::max<std::size_t>(2, n + (n % 2));
  return uniform_grid(a, b, n);
}

void check_interval(const Schedule& s, double a, double b) {
  const Window w = s.window();
  if (!(b > a) || !w.contains(a) || !w.contains(b))
    fail(ErrorCode::WindowExceeded, fmt::format("interval [{}, {}] not inside [{}, {}]", a, b, w.t0, w.t1));
}

}  // namespace

double adiabatic_metric(const Schedule& s, double t, int n, int m, const PhaseOptions& opts) {
  check_label(s, n, "adiabatic_metric");
  check_label(s, m, "adiabatic_metric");
  if (n == m) fail(ErrorCode::DimensionMismatch, "adiabatic_metric: n == m");
  const Window w = s.window();
  if (!w.contains(t)) fail(ErrorCode::WindowExceeded, fmt::format("t = {} outside window", t));

  const EigenPath path = eigenpath_derivative(s, t, nullptr, opts.derivative);
  const Complex gap = path.es.eigenvalues[n] - path.es.eigenvalues[m];
  if (std::abs(gap) == 0.0) fail(ErrorCode::DegenerateSpectrum, "adiabatic_metric: zero gap");
  const double coupling = std::abs(path.es.lefts.col(n).dot(path.d_rights.col(m)));

  // Walk back to the window start so labels stay those at t.
  double im_w = 0.0;
  if (t - w.t0 > 1e-12 * w.length()) {
    std::vector<double> grid = even_grid(w.t0, t, opts.step_fraction * w.length());
    std::vector<double> rev(grid.rbegin(), grid.rend());
    // tracked.front() is eigensystem(t), the same ordering as path.es
    const auto tracked = track_eigensystems(s, rev);
    std::vector<double> f(rev.size());
    for (std::size_t k = 0; k < rev.size(); ++k)
      f[rev.size() - 1 - k] = (tracked[k].eigenvalues[n] - tracked[k].eigenvalues[m]).imag();
    im_w = simpson(f, grid[1] - grid[0]);
  }
  return coupling / std::abs(gap) * std::exp(-im_w);
}

double max_adiabatic_metric(const Schedule& s, std::size_t samples, const DerivativeOptions& opts) {
  const Window w = s.window();
  const auto grid = uniform_grid(w.t0, w.t1, std::max<std::size_t>(samples, 3) - 1);
  const auto paths = track_eigenpaths(s, grid, opts);
  const int dim = paths.front().es.size();
  const double h = grid[1] - grid[0];
  double worst = 0.0;
  for (int n = 0; n < dim; ++n)
    for (int m = 0; m < dim; ++m) {
      if (n == m) continue;
      std::vector<double> im_gap(grid.size());
      for (std::size_t k = 0; k < grid.size(); ++k)
        im_gap[k] = (paths[k].es.eigenvalues[n] - paths[k].es.eigenvalues[m]).imag();
      const auto im_w = cumulative_simpson(im_gap, h);
      for (std::size_t k = 0; k < grid.size(); ++k) {
        const auto& p = paths[k];
        const double gap = std::abs(p.es.eigenvalues[n] - p.es.eigenvalues[m]);
        const double eta = std::abs(p.es.lefts.col(n).dot(p.d_rights.col(m))) / gap * std::exp(-im_w[k]);
        worst = std::max(worst, eta);
      }
    }
  return worst;
}

Complex berry_connection(const Schedule& s, double t, int n, const DerivativeOptions& opts) {
  check_label(s, n, "berry_connection");
  const EigenPath path = eigenpath_derivative(s, t, nullptr, opts);
  return kI * path.es.lefts.col(n).dot(path.d_rights.col(n));
}

PhaseLedger accumulate_phases(const Schedule& s, double a, double b, int n, const PhaseOptions& opts) {
  check_label(s, n, "accumulate_phases");
  check_interval(s, a, b);
  const auto grid = even_grid(a, b, opts.step_fraction * s.window().length());
  const auto paths = track_eigenpaths(s, grid, opts.derivative);
  const int dim = paths.front().es.size();

  std::vector<Complex> energy(grid.size()), conn(grid.size());
  std::vector<std::vector<double>> gaps(dim, std::vector<double>(grid.size()));
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const auto& p = paths[k];
    energy[k] = p.es.eigenvalues[n];
    conn[k] = kI * p.es.lefts.col(n).dot(p.d_rights.col(n));
    for (int m = 0; m < dim; ++m) gaps[m][k] = (p.es.eigenvalues[n] - p.es.eigenvalues[m]).imag();
  }
  const double h = grid[1] - grid[0];
  PhaseLedger out;
  out.dynamic = -simpson(energy, h);
  out.geometric = simpson(conn, h);
  out.imW.resize(dim);
  for (int m = 0; m < dim; ++m) out.imW[m] = simpson(gaps[m], h);
  return out;
}

Trajectory adiabatic_reference(const Schedule& s, const std::vector<double>& grid, int n,
                               bool drop_phases, const DerivativeOptions& opts) {
  check_label(s, n, "adiabatic_reference");
  const double h = uniform_step(grid);
  check_interval(s, grid.front(), grid.back());
  const auto paths = track_eigenpaths(s, grid, opts);

  std::vector<Complex> rate(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const auto& p = paths[k];
    // i * (-E_n + A_n) is the log-derivative of the reference amplitude
    rate[k] = -p.es.eigenvalues[n] + kI * p.es.lefts.col(n).dot(p.d_rights.col(n));
  }
  const auto phase = cumulative_simpson(rate, h);

  Trajectory ref;
  ref.times = grid;
  ref.states.reserve(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const Vector r = paths[k].es.rights.col(n);
    ref.states.push_back(drop_phases ? r : Vector(std::exp(kI * phase[k]) * r));
  }
  fill_populations(ref);
  return ref;
}

}  // namespace nhcd
