// Copyright 2026 The nhcd Authors.
// SPDX-License-Identifier: Apache-2.0

#include "nhcd/symmetry.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

namespace nhcd {

void validate_symmetry_matrix(const Matrix& U) {
  require_square_finite(U, "symmetry matrix");
  const auto n = U.rows();
  const double unitary = (U.adjoint() * U - Matrix::Identity(n, n)).norm();
  const double hermitian = (U - U.adjoint()).norm();
  if (unitary > 1e-10 || hermitian > 1e-10)
    fail(ErrorCode::BadSymmetryMatrix,
         fmt::format("U fails unitarity ({:.3g}) or hermiticity ({:.3g})", unitary, hermitian));
}

namespace {

SymmetryCheck check_sign(const Matrix& H, const Matrix& U, double sign, double tol) {
  require_square_finite(H, "symmetry check");
  if (U.rows() != H.rows()) fail(ErrorCode::DimensionMismatch, "symmetry check: U size");
  validate_symmetry_matrix(U);
  const double hnorm = H.norm();
  const double res = (H.adjoint() - sign * U * H * U.adjoint()).norm();
  SymmetryCheck out;
  out.residual = hnorm > 0 ? res / hnorm : res;
  out.holds = res <= tol * hnorm;
  return out;
}

}  // namespace

SymmetryCheck check_pseudo(const Matrix& H, const Matrix& U, double tol) {
  return check_sign(H, U, 1.0, tol);
}

SymmetryCheck check_antipseudo(const Matrix& H, const Matrix& U, double tol) {
  return check_sign(H, U, -1.0, tol);
}

SymmetryCheck check_symmetry(const Matrix& H, const SymmetrySpec& spec, double tol) {
  return spec.kind == SymmetryKind::Pseudo ? check_pseudo(H, spec.U, tol)
                                           : check_antipseudo(H, spec.U, tol);
}

std::vector<int> pair_spectrum(const Vector& eigenvalues, SymmetryKind kind, double tol) {
  const int n = static_cast<int>(eigenvalues.size());
  std::vector<int> pairing(n, -1);
  for (int i = 0; i < n; ++i) {
    const Complex target =
        kind == SymmetryKind::Pseudo ? std::conj(eigenvalues[i]) : -std::conj(eigenvalues[i]);
    int best = -1;
    double dist = 0.0;
    for (int j = 0; j < n; ++j) {
      const double d = std::abs(eigenvalues[j] - target);
      if (best < 0 || d < dist) best = j, dist = d;
    }
    if (dist > tol)
      fail(ErrorCode::UnpairableSpectrum,
           fmt::format("no partner for E = {}{:+}i within {:.3g} (closest {:.3g})",
                       eigenvalues[i].real(), eigenvalues[i].imag(), tol, dist));
    pairing[i] = best;
  }
  for (int i = 0; i < n; ++i)
    if (pairing[pairing[i]] != i) fail(ErrorCode::UnpairableSpectrum, "pairing is not an involution");
  return pairing;
}

LeftConstruction left_from_right(const Matrix& rights, const std::vector<int>& pairing,
                                 const Matrix& U, double ep_guard) {
  const auto n = rights.cols();
  if (static_cast<Eigen::Index>(pairing.size()) != n || U.rows() != rights.rows())
    fail(ErrorCode::DimensionMismatch, "left_from_right: shape mismatch");
  LeftConstruction out;
  out.lefts.resize(rights.rows(), n);
  out.state_scalars.resize(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const int p = pairing[k];
    if (p < 0 || p >= n) fail(ErrorCode::UnpairableSpectrum, "left_from_right: bad partner index");
    const Vector up = U * rights.col(p);
    const Complex overlap = up.dot(rights.col(k));  // <r_p|U|r_k>, U Hermitian
    if (!(std::abs(overlap) > ep_guard * up.norm() * rights.col(k).norm()))
      fail(ErrorCode::SelfOrthogonal,
           fmt::format("left_from_right: <partner|U|r> = {:.3g} for state {}", std::abs(overlap), k));
    const Complex u = 1.0 / overlap;
    out.state_scalars[k] = u;
    out.lefts.col(k) = std::conj(u) * up;
  }
  return out;
}

EigenSystem symmetric_eigensystem(const Matrix& H, const SymmetrySpec& spec, const EigOptions& opts) {
  validate_symmetry_matrix(spec.U);
  const EigenPairs r = eig(H, opts);
  EigenSystem es;
  es.eigenvalues = r.values;
  es.rights = r.vectors;
  double scale = 0.0;
  for (Eigen::Index k = 0; k < r.values.size(); ++k) scale = std::max(scale, std::abs(r.values[k]));
  es.pairing = pair_spectrum(r.values, spec.kind, 1e-8 * std::max(1.0, scale));
  es.lefts = left_from_right(es.rights, es.pairing, spec.U, opts.ep_guard).lefts;
  return es;
}

HermitianSplit hermitian_split(const Matrix& H) {
  require_square_finite(H, "hermitian_split");
  const Matrix hd = H.adjoint();
  return {(H + hd) * 0.5, (H - hd) * Complex(0.0, -0.5)};
}

SelfNormalizedReport check_self_normalized(const Matrix& H, const Matrix& U, const Vector& state,
                                           Complex eigenvalue, SymmetryKind kind, double tol) {
  require_square_finite(H, "check_self_normalized");
  validate_symmetry_matrix(U);
  if (state.size() != H.rows()) fail(ErrorCode::DimensionMismatch, "check_self_normalized: state");
  SelfNormalizedReport rep;
  const double scale = std::max(H.norm(), 1.0) * std::max(state.norm(), 1e-300);
  rep.eigen_residual = (H * state - eigenvalue * state).norm();
  if (rep.eigen_residual > 1e-8 * scale)
    fail(ErrorCode::NotAnEigenvector,
         fmt::format("check_self_normalized: |H psi - E psi| = {:.3g}", rep.eigen_residual));

  const auto [hr, hi] = hermitian_split(H);
  if (kind == SymmetryKind::Pseudo) {
    rep.residual_real = (hr * state - eigenvalue * state).norm();
    rep.residual_imag = (hi * state).norm();
  } else {
    rep.residual_real = (hr * state).norm();
    rep.residual_imag = (hi * state + kI * eigenvalue * state).norm();
  }
  rep.self_overlap = state.dot(state);
  rep.self_normalized = rep.residual_real <= tol && rep.residual_imag <= tol &&
                        std::abs(rep.self_overlap - 1.0) <= 10.0 * tol;
  return rep;
}

}  // namespace nhcd
