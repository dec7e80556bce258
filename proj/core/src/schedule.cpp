// Copyright 2026 The nhcd Authors.
// SPDX-License-Identifier: Apache-2.0

#include "nhcd/schedule.hpp"

#include <cmath>

#include <fmt/format.h>

namespace nhcd {

bool Window::contains(double t) const {
  const double slack = 1e-12 * std::max(1.0, std::abs(t1 - t0));
  return t >= t0 - slack && t <= t1 + slack;
}

EigenSystem Schedule::eigensystem(double t) const {
  const Matrix h = hamiltonian(t);
  if (auto sym = symmetry(t)) return symmetric_eigensystem(h, *sym);
  return biorthonormal_eigensystem(h);
}

int Schedule::dim() const { return static_cast<int>(hamiltonian(window().t0).rows()); }

CallbackSchedule::CallbackSchedule(Window w, HamiltonianFn h, std::optional<SymmetrySpec> sym)
    : window_(w), h_(std::move(h)), sym_(std::move(sym)) {}

GaugeFix tracking_gauge(const Schedule& s) {
  return s.analytic_gauge() ? GaugeFix::None : GaugeFix::Phase;
}

EigenPath eigenpath_derivative(const Schedule& s, double t, const EigenSystem* anchor,
                               const DerivativeOptions& opts) {
  const Window w = s.window();
  if (!w.contains(t))
    fail(ErrorCode::WindowExceeded, fmt::format("t = {} outside [{}, {}]", t, w.t0, w.t1));
  const GaugeFix fix = tracking_gauge(s);
  EigenPath path;
  path.t = t;
  path.es = s.eigensystem(t);
  if (anchor) path.es = match_to_previous(path.es, *anchor, fix);

  const double d = opts.delta_fraction * w.length();
  auto at = [&](double dt) { return match_to_previous(s.eigensystem(t + dt), path.es, fix).rights; };
  path.d_rights = (at(-2 * d) - 8.0 * at(-d) + 8.0 * at(d) - at(2 * d)) / (12.0 * d);
  return path;
}

std::vector<EigenSystem> track_eigensystems(const Schedule& s, const std::vector<double>& grid) {
  std::vector<EigenSystem> out;
  out.reserve(grid.size());
  const GaugeFix fix = tracking_gauge(s);
  for (double t : grid) {
    EigenSystem es = s.eigensystem(t);
    if (!out.empty()) es = match_to_previous(es, out.back(), fix);
    out.push_back(std::move(es));
  }
  return out;
}

std::vector<EigenPath> track_eigenpaths(const Schedule& s, const std::vector<double>& grid,
                                        const DerivativeOptions& opts) {
  std::vector<EigenPath> out;
  out.reserve(grid.size());
  for (double t : grid)
    out.push_back(eigenpath_derivative(s, t, out.empty() ? nullptr : &out.back().es, opts));
  return out;
}

std::vector<double> uniform_grid(double a, double b, std::size_t intervals) {
  if (intervals == 0) fail(ErrorCode::GridMismatch, "uniform_grid: zero intervals");
  std::vector<double> g(intervals + 1);
  const double h = (b - a) / static_cast<double>(intervals);
  for (std::size_t k = 0; k <= intervals; ++k) g[k] = a + h * static_cast<double>(k);
  g.back() = b;
  return g;
}

std::vector<double> grid_with_step(double a, double b, double step) {
  if (!(step > 0) || !(b > a)) fail(ErrorCode::GridMismatch, "grid_with_step: bad range or step");
  const auto n = static_cast<std::size_t>(std::ceil((b - a) / step - 1e-9));
  return uniform_grid(a, b, std::max<std::size_t>(n, 1));
}

}  // namespace nhcd
