// Copyright 2026 The nhcd Authors.
// SPDX-License-Identifier: Apache-2.0

#include "nhcd/quadrature.hpp"

#include <fmt/format.h>

namespace nhcd {

double uniform_step(const std::vector<double>& grid) {
  if (grid.size() < 2) fail(ErrorCode::GridMismatch, "grid needs at least two points");
  const double h = (grid.back() - grid.front()) / static_cast<double>(grid.size() - 1);
  if (!(h > 0)) fail(ErrorCode::GridMismatch, "grid is not increasing");
  for (std::size_t k = 1; k < grid.size(); ++k)
    if (std::abs(grid[k] - grid[k - 1] - h) > 1e-9 * h)
      fail(ErrorCode::GridMismatch, fmt::format("grid not uniform at index {}", k));
  return h;
}

}  // namespace nhcd
