// Copyright 2026 The nhcd Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef NHCD_TRAJECTORY_HPP
#define NHCD_TRAJECTORY_HPP

#include <cstddef>
#include <vector>

#include "nhcd/types.hpp"

namespace nhcd {

/// Time-ordered record of a (generally non-unitary) evolution. Fields other
/// than times/states stay empty until the producing step fills them.
struct Trajectory {
  std::vector<double> times;
  std::vector<Vector> states;

  std::vector<RealVector> populations;         // |<k|psi>|^2, raw
  std::vector<RealVector> populations_renorm;  // raw / <psi|psi>
  std::vector<double> norms;                   // <psi|psi>

  std::vector<double> fidelity_u;      // |<psi|U|psi_ref>|
  std::vector<double> fidelity_plain;  // |<psi|psi_ref>| / (|psi| |psi_ref|)

  std::vector<double> alpha;  // 0.5 ln <psi|psi>
  std::vector<double> beta;
  std::vector<Vector> normalized;  // psi e^{-alpha - i beta}
  double alpha_rate_mismatch = 0.0;  // max |d alpha/dt - <H_I>| on interior nodes

  bool truncated = false;  // integration stopped on norm overflow

  std::size_t size() const { return times.size(); }
  int dim() const { return states.empty() ? 0 : static_cast<int>(states.front().size()); }
};

/// Fill populations, renormalized populations and norms from the states.
void fill_populations(Trajectory& traj);

}  // namespace nhcd

#endif  // NHCD_TRAJECTORY_HPP
