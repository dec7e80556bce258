// Copyright 2026 The nhcd Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef NHCD_SWEEP_HPP
#define NHCD_SWEEP_HPP

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "nhcd/types.hpp"

namespace nhcd {

// pseudo: ratio = gamma/omega with sqrt(omega^2 + gamma^2) = 2, phi = 0
// antipseudo: ratio = Omega/gamma with gamma = 1, theta = pi/4
enum class SweepModel { Pseudo, Antipseudo };

SweepModel parse_sweep_model(std::string_view s);
std::string_view to_string(SweepModel m);

Matrix sweep_hamiltonian(SweepModel model, double ratio);

struct SweepRow {
  double ratio = 0.0;
  Vector energies;   // column order follows continuity from the first sample
  std::string flag;  // empty, "ep" on the EP guard, "degenerate" for a plain degeneracy
};

struct SweepTable {
  SweepModel model = SweepModel::Pseudo;
  std::vector<SweepRow> rows;
};

/// `samples` evenly spaced ratios in [lo, hi]. Samples on the EP are kept
/// as flagged rows with NaN energies.
SweepTable spectrum_sweep(SweepModel model, double lo, double hi, std::size_t samples);

/// ratio, re_e1, im_e1, ..., flag
void write_sweep_csv(const SweepTable& table, std::ostream& out);

}  // namespace nhcd

#endif  // NHCD_SWEEP_HPP
