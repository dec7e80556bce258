// Copyright 2026 The nhcd Authors.
// SPDX-License-Identifier: Apache-2.0

#include "nhcd/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "nhcd/quadrature.hpp"
#include "nhcd/symmetry.hpp"

namespace nhcd {

Method parse_method(std::string_view name) {
  if (name == "rk4-fixed") return Method::Rk4Fixed;
  if (name == "rk4-adaptive") return Method::Rk4Adaptive;
  fail(ErrorCode::ConfigError, fmt::format("unknown integration method '{}'", name));
}

std::string_view to_string(Method m) { return m == Method::Rk4Fixed ? "rk4-fixed" : "rk4-adaptive"; }

void fill_populations(Trajectory& traj) {
  const std::size_t n = traj.states.size();
  traj.populations.resize(n);
  traj.populations_renorm.resize(n);
  traj.norms.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const RealVector p = traj.states[k].cwiseAbs2();
    const double norm = p.sum();
    traj.populations[k] = p;
    traj.norms[k] = norm;
    traj.populations_renorm[k] = norm > 0 ? RealVector(p / norm) : p;
  }
}

namespace {

struct Stepper {
  const HamiltonianFn& h;
  const IntegrateOptions& opts;

  Matrix eval(double t, double step) const {
    Matrix m = h(t);
    if (!all_finite(m)) fail(ErrorCode::NonFinite, fmt::format("H(t) non-finite at t = {}", t));
    if (m.norm() * step > opts.max_step_norm)
      fail(ErrorCode::StepTooLarge,
           fmt::format("||H|| h = {:.3g} > {} at t = {}", m.norm() * step, opts.max_step_norm, t));
    return m;
  }

  Vector rk4(double t, double dt, const Vector& y) const {
    const Matrix h0 = eval(t, dt), hm = eval(t + 0.5 * dt, dt), h1 = eval(t + dt, dt);
    const Vector k1 = -kI * (h0 * y);
    const Vector k2 = -kI * (hm * (y + 0.5 * dt * k1));
    const Vector k3 = -kI * (hm * (y + 0.5 * dt * k2));
    const Vector k4 = -kI * (h1 * (y + dt * k3));
    return y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }

  // Step doubling between two grid nodes; Richardson-corrected result.
  Vector adaptive(double t, double span, const Vector& y) const {
    double done = 0.0, dt = span;
    Vector cur = y;
    while (done < span * (1.0 - 1e-14)) {
      dt = std::min(dt, span - done);
      const Vector full = rk4(t + done, dt, cur);
      const Vector half = rk4(t + done + 0.5 * dt, 0.5 * dt, rk4(t + done, 0.5 * dt, cur));
      const double err = (half - full).norm() / 15.0;
      const double scale = std::max(cur.norm(), 1e-300);
      if (err <= opts.adaptive_tol * scale || dt < 1e-12 * span) {
        cur = half + (half - full) / 15.0;
        done += dt;
        if (err < 0.1 * opts.adaptive_tol * scale) dt *= 2.0;
      } else {
        dt *= 0.5;
      }
    }
    return cur;
  }
};

}  // namespace

Trajectory integrate(const HamiltonianFn& h, const Vector& psi0, const std::vector<double>& grid,
                     const IntegrateOptions& opts) {
  if (grid.size() < 2) fail(ErrorCode::GridMismatch, "integrate: grid needs two nodes");
  for (std::size_t k = 1; k < grid.size(); ++k)
    if (!(grid[k] > grid[k - 1])) fail(ErrorCode::GridMismatch, "integrate: grid not increasing");
  if (!all_finite(psi0)) fail(ErrorCode::NonFinite, "integrate: initial state non-finite");
  const Matrix h0 = h(grid.front());
  if (h0.rows() != psi0.size() || h0.cols() != psi0.size())
    fail(ErrorCode::DimensionMismatch, "integrate: state/Hamiltonian dimension mismatch");

  const Stepper st{h, opts};
  Trajectory traj;
  traj.times.reserve(grid.size());
  traj.states.reserve(grid.size());
  traj.times.push_back(grid.front());
  traj.states.push_back(psi0);
  Vector y = psi0;
  for (std::size_t k = 1; k < grid.size(); ++k) {
    const double t = grid[k - 1], dt = grid[k] - grid[k - 1];
    y = opts.method == Method::Rk4Fixed ? st.rk4(t, dt, y) : st.adaptive(t, dt, y);
    if (!all_finite(y) || y.squaredNorm() > opts.overflow_norm) {
      traj.truncated = true;
      break;
    }
    traj.times.push_back(grid[k]);
    traj.states.push_back(y);
  }
  fill_populations(traj);
  return traj;
}

void observables(Trajectory& traj, const std::optional<MatrixFn>& u, const Trajectory* reference) {
  fill_populations(traj);
  traj.fidelity_u.clear();
  traj.fidelity_plain.clear();
  if (!reference) return;
  if (reference->size() < traj.size())
    fail(ErrorCode::GridMismatch, "observables: reference shorter than trajectory");
  for (std::size_t k = 0; k < traj.size(); ++k) {
    if (std::abs(reference->times[k] - traj.times[k]) > 1e-12 * std::max(1.0, std::abs(traj.times[k])))
      fail(ErrorCode::GridMismatch, fmt::format("observables: grids differ at index {}", k));
    const Vector& psi = traj.states[k];
    const Vector& ref = reference->states[k];
    const double denom = psi.norm() * ref.norm();
    traj.fidelity_plain.push_back(denom > 0 ? std::abs(psi.dot(ref)) / denom : 0.0);
    if (u) traj.fidelity_u.push_back(std::abs(psi.dot((*u)(traj.times[k]) * ref)));
  }
}

void project_phase_decomposition(Trajectory& traj, const HamiltonianFn& h) {
  const std::size_t n = traj.size();
  if (n < 2) fail(ErrorCode::GridMismatch, "phase decomposition needs two records");
  if (traj.norms.size() != n) fill_populations(traj);
  for (std::size_t k = 0; k < n; ++k)
    if (!(traj.norms[k] > 0)) fail(ErrorCode::ZeroNorm, fmt::format("zero norm at t = {}", traj.times[k]));
  const double dt = uniform_step(traj.times);

  // Unit-norm states in the parallel-transport section of the grid.
  std::vector<Vector> section(n);
  section[0] = traj.states[0] / traj.states[0].norm();
  for (std::size_t k = 1; k < n; ++k) {
    Vector v = traj.states[k] / traj.states[k].norm();
    const Complex o = section[k - 1].dot(v);
    if (std::abs(o) > 0) v *= std::conj(o) / std::abs(o);
    section[k] = v;
  }

  std::vector<double> beta_rate(n), h_imag(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto [hr, hi] = hermitian_split(h(traj.times[k]));
    const Vector& v = section[k];
    Vector dv;
    if (k == 0)
      dv = (-3.0 * section[0] + 4.0 * section[1] - (n > 2 ? section[2] : section[1])) / (2.0 * dt);
    else if (k == n - 1)
      dv = (3.0 * section[k] - 4.0 * section[k - 1] + (n > 2 ? section[k - 2] : section[k - 1])) / (2.0 * dt);
    else
      dv = (section[k + 1] - section[k - 1]) / (2.0 * dt);
    beta_rate[k] = -v.dot(hr * v).real() + (kI * v.dot(dv)).real();
    h_imag[k] = v.dot(hi * v).real();
  }

  traj.alpha.resize(n);
  for (std::size_t k = 0; k < n; ++k) traj.alpha[k] = 0.5 * std::log(traj.norms[k]);
  traj.beta = cumulative_simpson(beta_rate, dt);
  traj.normalized.resize(n);
  for (std::size_t k = 0; k < n; ++k)
    traj.normalized[k] = traj.states[k] * std::exp(Complex(-traj.alpha[k], -traj.beta[k]));

  double worst = 0.0;
  for (std::size_t k = 1; k + 1 < n; ++k) {
    const double rate = (traj.alpha[k + 1] - traj.alpha[k - 1]) / (2.0 * dt);
    worst = std::max(worst, std::abs(rate - h_imag[k]));
  }
  traj.alpha_rate_mismatch = worst;
}

}  // namespace nhcd
