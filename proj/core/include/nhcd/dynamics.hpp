// Copyright 2026 The nhcd Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef NHCD_DYNAMICS_HPP
#define NHCD_DYNAMICS_HPP

#include <functional>
#include <optional>
#include <string_view>

#include "nhcd/trajectory.hpp"

namespace nhcd {

enum class Method { Rk4Fixed, Rk4Adaptive };

Method parse_method(std::string_view name);
std::string_view to_string(Method m);

struct IntegrateOptions {
  Method method = Method::Rk4Fixed;
  double max_step_norm = 0.1;   // require ||H||_F h <= this at every stage
  double overflow_norm = 1e12;  // stop (truncated) once <psi|psi> exceeds this
  double adaptive_tol = 1e-12;  // per-substep error relative to |psi|
};

/// Solves i d psi/dt = H(t) psi and records psi at every grid node. The
/// result is never renormalized.
Trajectory integrate(const HamiltonianFn& h, const Vector& psi0, const std::vector<double>& grid,
                     const IntegrateOptions& opts = {});

using MatrixFn = std::function<Matrix(double)>;

/// Populations/norms and, with a reference, both fidelities. Without U the
/// U-fidelity column is left empty.
void observables(Trajectory& traj, const std::optional<MatrixFn>& u = std::nullopt,
                 const Trajectory* reference = nullptr);

/// psi = e^{alpha + i beta} psi~ with alpha = 0.5 ln <psi|psi>. beta integrates
/// -<H_R> + i<psi~|d psi~> with the geometric term taken in the grid
/// parallel-transport section.
void project_phase_decomposition(Trajectory& traj, const HamiltonianFn& h);

}  // namespace nhcd

#endif  // NHCD_DYNAMICS_HPP
