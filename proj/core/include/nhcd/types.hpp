// Copyright 2026 The nhcd Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef NHCD_TYPES_HPP
#define NHCD_TYPES_HPP

#include <complex>
#include <functional>

#include <Eigen/Dense>

namespace nhcd {

using Complex = std::complex<double>;

/// Dense complex square matrix. Dimensions in this library are small (<= 8).
using Matrix = Eigen::MatrixXcd;
/// Complex column vector: states, eigenvectors, expansion coefficients.
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

/// Time-dependent Hamiltonian H(t), hbar = 1.
using HamiltonianFn = std::function<Matrix(double)>;

inline constexpr Complex kI{0.0, 1.0};

/// Inner product <a|b> (antilinear in the first argument).
inline Complex braket(const Vector& a, const Vector& b) { return a.dot(b); }

/// <a|M|b>.
inline Complex braket(const Vector& a, const Matrix& m, const Vector& b) {
  return a.dot(m * b);
}

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      const auto& z = m(i, j);
      if (!std::isfinite(std::real(z)) || !std::isfinite(std::imag(z))) return false;
    }
  return true;
}

}  // namespace nhcd

#endif  // NHCD_TYPES_HPP
