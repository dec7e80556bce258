// Copyright 2026 The nhcd Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef NHCD_ADIABATIC_HPP
#define NHCD_ADIABATIC_HPP

#include "nhcd/schedule.hpp"
#include "nhcd/trajectory.hpp"

namespace nhcd {

struct PhaseOptions {
  // Quadrature spacing as a fraction of the window length (rounded so the
  // interval count is even).
  double step_fraction = 2.5e-4;
  DerivativeOptions derivative;
};

/// Phases carried by adiabatic state n over an interval:
/// the state picks up exp(i (dynamic + geometric)).
struct PhaseLedger {
  Complex dynamic;    // -int E_n dt
  Complex geometric;  // int A_n dt
  RealVector imW;     // imW[m] = int Im(E_n - E_m) dt
};

/// eta_nm = |<l_n|d r_m/dt>| / |E_n - E_m| * exp(-Im W_nm), W_nm accumulated
/// from the window start to t. Labels follow the eigensystem ordering at t.
double adiabatic_metric(const Schedule& s, double t, int n, int m, const PhaseOptions& opts = {});

/// max over the grid and all n != m of eta_nm, evaluated in a single
/// forward sweep of `samples` equally spaced points across the window.
double max_adiabatic_metric(const Schedule& s, std::size_t samples = 401,
                            const DerivativeOptions& opts = {});

/// A_n = i <l_n|d r_n/dt> in the schedule's gauge at t.
Complex berry_connection(const Schedule& s, double t, int n, const DerivativeOptions& opts = {});

/// Labels refer to the ordering at the interval start.
PhaseLedger accumulate_phases(const Schedule& s, double a, double b, int n,
                              const PhaseOptions& opts = {});

/// psi_n(t) = exp(i(dynamic + geometric)) r_n(t) on a uniform grid, labels
/// fixed at grid.front(). drop_phases emits the bare eigenpath r_n(t).
Trajectory adiabatic_reference(const Schedule& s, const std::vector<double>& grid, int n,
                               bool drop_phases = false, const DerivativeOptions& opts = {});

}  // namespace nhcd

#endif  // NHCD_ADIABATIC_HPP
