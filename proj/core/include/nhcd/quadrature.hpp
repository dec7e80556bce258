// Copyright 2026 The nhcd Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef NHCD_QUADRATURE_HPP
#define NHCD_QUADRATURE_HPP

#include <cmath>
#include <vector>

#include "nhcd/error.hpp"

namespace nhcd {

/// Spacing of a uniform grid; GridMismatch if the grid is not uniform.
double uniform_step(const std::vector<double>& grid);

/// Composite Simpson over an even number of intervals.
template <typename T>
T simpson(const std::vector<T>& f, double h) {
  if (f.size() < 3 || f.size() % 2 == 0)
    fail(ErrorCode::GridMismatch, "simpson: need an even number of intervals");
  T acc = f.front() + f.back();
  for (std::size_t k = 1; k + 1 < f.size(); ++k) acc += f[k] * (k % 2 == 1 ? 4.0 : 2.0);
  return acc * (h / 3.0);
}

/// Running integral I_k = int_{x_0}^{x_k} f. Even nodes are plain composite
/// Simpson; odd nodes add a 3-point rule for the last interval.
template <typename T>
std::vector<T> cumulative_simpson(const std::vector<T>& f, double h) {
  const std::size_t n = f.size();
  std::vector<T> out(n, T{});
  if (n < 2) return out;
  for (std::size_t k = 2; k < n; k += 2)
    out[k] = out[k - 2] + (f[k - 2] + 4.0 * f[k - 1] + f[k]) * (h / 3.0);
  for (std::size_t k = 1; k < n; k += 2) {
    if (k + 1 < n)
      out[k] = out[k - 1] + (5.0 * f[k - 1] + 8.0 * f[k] - f[k + 1]) * (h / 12.0);
    else if (k >= 2)
      out[k] = out[k - 1] + (-f[k - 2] + 8.0 * f[k - 1] + 5.0 * f[k]) * (h / 12.0);
    else
      out[k] = (f[0] + f[1]) * (h / 2.0);
  }
  return out;
}

}  // namespace nhcd

#endif  // NHCD_QUADRATURE_HPP
