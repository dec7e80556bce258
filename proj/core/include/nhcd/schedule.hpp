// Copyright 2026 The nhcd Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef NHCD_SCHEDULE_HPP
#define NHCD_SCHEDULE_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "nhcd/linalg.hpp"
#include "nhcd/symmetry.hpp"

namespace nhcd {

struct Window {
  double t0 = 0.0;
  double t1 = 1.0;
  double length() const { return t1 - t0; }
  bool contains(double t) const;
};

using ParameterMap = std::map<std::string, double>;

/// Time-parameterized Hamiltonian family.
class Schedule {
 public:
  virtual ~Schedule() = default;

  virtual Window window() const = 0;
  virtual Matrix hamiltonian(double t) const = 0;
  virtual ParameterMap parameters(double /*t*/) const { return {}; }
  virtual ParameterMap parameter_rates(double /*t*/) const { return {}; }
  virtual std::optional<SymmetrySpec> symmetry(double /*t*/) const { return std::nullopt; }

  /// Binormalized eigensystem at t. The default is numeric: through the
  /// symmetry construction when a SymmetrySpec exists, else via H^dagger.
  virtual EigenSystem eigensystem(double t) const;

  /// True when eigensystem(t) carries a smooth gauge of its own (closed
  /// forms); eigenpath tracking then permutes but never rephases.
  virtual bool analytic_gauge() const { return false; }

  int dim() const;
};

/// Schedule from plain callbacks. No symmetry unless one is supplied.
class CallbackSchedule : public Schedule {
 public:
  CallbackSchedule(Window w, HamiltonianFn h, std::optional<SymmetrySpec> sym = std::nullopt);
  Window window() const override { return window_; }
  Matrix hamiltonian(double t) const override { return h_(t); }
  std::optional<SymmetrySpec> symmetry(double) const override { return sym_; }

 private:
  Window window_;
  HamiltonianFn h_;
  std::optional<SymmetrySpec> sym_;
};

struct DerivativeOptions {
  // Finite-difference step as a fraction of the window length.
  double delta_fraction = 1e-4;
};

/// Eigensystem at t together with d/dt of its right eigenvectors.
struct EigenPath {
  double t = 0.0;
  EigenSystem es;
  Matrix d_rights;
};

GaugeFix tracking_gauge(const Schedule& s);

/// es(t) aligned to `anchor` (when given) and d r_n/dt from a 5-point central
/// stencil on neighbours aligned to es(t). Throws WindowExceeded if t lies
/// outside the window.
EigenPath eigenpath_derivative(const Schedule& s, double t, const EigenSystem* anchor = nullptr,
                               const DerivativeOptions& opts = {});

/// Eigensystems along a grid, each matched to its predecessor. Labels follow
/// the ordering at grid.front().
std::vector<EigenSystem> track_eigensystems(const Schedule& s, const std::vector<double>& grid);

/// Eigenpaths with derivatives along a grid, labels fixed at grid.front().
std::vector<EigenPath> track_eigenpaths(const Schedule& s, const std::vector<double>& grid,
                                        const DerivativeOptions& opts = {});

/// n+1 equally spaced points from a to b inclusive.
std::vector<double> uniform_grid(double a, double b, std::size_t intervals);
/// Uniform grid whose spacing does not exceed `step` (last point exactly b).
std::vector<double> grid_with_step(double a, double b, double step);

}  // namespace nhcd

#endif  // NHCD_SCHEDULE_HPP
