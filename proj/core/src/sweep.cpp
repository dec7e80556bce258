// Copyright 2026 The nhcd Authors.
// SPDX-License-Identifier: Apache-2.0

#include "nhcd/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>

#include <fmt/format.h>

#include "nhcd/linalg.hpp"
#include "nhcd/models.hpp"

namespace nhcd {

SweepModel parse_sweep_model(std::string_view s) {
  if (s == "pseudo") return SweepModel::Pseudo;
  if (s == "antipseudo") return SweepModel::Antipseudo;
  fail(ErrorCode::ConfigError, fmt::format("unknown sweep model '{}'", s));
}

std::string_view to_string(SweepModel m) { return m == SweepModel::Pseudo ? "pseudo" : "antipseudo"; }

Matrix sweep_hamiltonian(SweepModel model, double ratio) {
  if (model == SweepModel::Pseudo) {
    const double omega = 2.0 / std::sqrt(1.0 + ratio * ratio);
    return stirap_hamiltonian(pseudo_pattern(omega, ratio * omega, 0.0));
  }
  const double half = ratio / std::sqrt(2.0);
  return stirap_hamiltonian(antipseudo_pattern(half, half, 1.0));
}

namespace {

// Cheapest assignment of current values to previous columns (brute force,
// the dimension is 3).
Vector follow(const Vector& prev, const Vector& cur) {
  std::vector<int> perm(cur.size()), best;
  std::iota(perm.begin(), perm.end(), 0);
  double best_cost = std::numeric_limits<double>::infinity();
  do {
    double cost = 0.0;
    for (std::size_t k = 0; k < perm.size(); ++k) cost += std::abs(prev[k] - cur[perm[k]]);
    if (cost < best_cost) best_cost = cost, best = perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  Vector out(cur.size());
  for (std::size_t k = 0; k < best.size(); ++k) out[k] = cur[best[k]];
  return out;
}

}  // namespace

SweepTable spectrum_sweep(SweepModel model, double lo, double hi, std::size_t samples) {
  if (samples < 2 || !(hi > lo)) fail(ErrorCode::ConfigError, "sweep needs hi > lo and >= 2 samples");
  SweepTable table;
  table.model = model;
  std::optional<Vector> prev;
  for (std::size_t k = 0; k < samples; ++k) {
    SweepRow row;
    row.ratio = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(samples - 1);
    try {
      if (std::abs(row.ratio - 1.0) <= 1e-8) fail(ErrorCode::EPCrossing, "sample on the EP");
      Vector e = eig(sweep_hamiltonian(model, row.ratio)).values;
      if (prev) e = follow(*prev, e);
      prev = e;
      row.energies = e;
    } catch (const Error& err) {
      if (err.code() != ErrorCode::DegenerateSpectrum && err.code() != ErrorCode::EPCrossing) throw;
      row.flag = err.code() == ErrorCode::EPCrossing ? "ep" : "degenerate";
      row.energies = Vector::Constant(3, Complex(std::nan(""), std::nan("")));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

void write_sweep_csv(const SweepTable& table, std::ostream& out) {
  out << "ratio";
  const Eigen::Index n = table.rows.empty() ? 0 : table.rows.front().energies.size();
  for (Eigen::Index k = 1; k <= n; ++k) out << fmt::format(",re_e{0},im_e{0}", k);
  out << ",flag\n";
  for (const auto& row : table.rows) {
    out << fmt::format("{:.12g}", row.ratio);
    for (Eigen::Index k = 0; k < n; ++k)
      out << fmt::format(",{:.12g},{:.12g}", row.energies[k].real(), row.energies[k].imag());
    out << ',' << row.flag << '\n';
  }
}

}  // namespace nhcd
