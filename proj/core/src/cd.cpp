// Copyright 2026 The nhcd Authors.
// SPDX-License-Identifier: Apache-2.0

#include "nhcd/cd.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "nhcd/quadrature.hpp"

namespace nhcd {

CDBundle assemble_cd(const EigenSystem& es, const Matrix& d_rights) {
  if (d_rights.rows() != es.rights.rows() || d_rights.cols() != es.rights.cols())
    fail(ErrorCode::DimensionMismatch, "assemble_cd: derivative shape");
  CDBundle b;
  b.H0 = es.spectral_sum();
  b.HcdOnly = kI * d_rights * es.lefts.adjoint();
  // <l_n|dr_n> on the diagonal
  const Vector diag = (es.lefts.adjoint() * d_rights).diagonal();
  b.H1 = b.HcdOnly - kI * es.rights * diag.asDiagonal() * es.lefts.adjoint();
  b.Htotal = b.H0 + b.H1;
  return b;
}

CDBundle cd_hermitian(const EigenSystem& es, const Matrix& d_rights, double tol) {
  const auto n = es.rights.cols();
  const double gram = max_abs(es.rights.adjoint() * es.rights - Matrix::Identity(n, n));
  const double same = max_abs(es.rights - es.lefts);
  if (gram > tol || same > tol)
    fail(ErrorCode::NotOrthonormal,
         fmt::format("cd_hermitian: gram error {:.3g}, left/right mismatch {:.3g}", gram, same));
  return assemble_cd(es, d_rights);
}

CDBundle cd_generic(const EigenSystem& es, const Matrix& d_rights, double tol) {
  const double err = es.biorthonormality_error();
  if (!(err <= tol))
    fail(ErrorCode::NotBinormalized, fmt::format("cd_generic: biorthonormality error {:.3g}", err));
  return assemble_cd(es, d_rights);
}

namespace {

CDBundle cd_symmetric(const Schedule& s, const EigenPath& path, SymmetryKind kind) {
  const auto sym = s.symmetry(path.t);
  if (!sym || sym->kind != kind)
    fail(ErrorCode::SymmetryViolation, "schedule does not carry the requested symmetry");
  const Matrix h = s.hamiltonian(path.t);
  const SymmetryCheck chk = check_symmetry(h, *sym, 1e-9);
  if (!chk.holds)
    fail(ErrorCode::SymmetryViolation, fmt::format("symmetry residual {:.3g} at t = {}", chk.residual, path.t));

  double scale = 1.0;
  for (Eigen::Index k = 0; k < path.es.eigenvalues.size(); ++k)
    scale = std::max(scale, std::abs(path.es.eigenvalues[k]));
  EigenSystem es = path.es;
  es.pairing = pair_spectrum(es.eigenvalues, kind, 1e-8 * scale);
  es.lefts = left_from_right(es.rights, es.pairing, sym->U).lefts;
  return assemble_cd(es, path.d_rights);
}

}  // namespace

CDBundle cd_pseudo(const Schedule& s, const EigenPath& path) {
  return cd_symmetric(s, path, SymmetryKind::Pseudo);
}

CDBundle cd_pseudo(const Schedule& s, double t, const DerivativeOptions& opts) {
  return cd_pseudo(s, eigenpath_derivative(s, t, nullptr, opts));
}

CDBundle cd_antipseudo(const Schedule& s, const EigenPath& path) {
  return cd_symmetric(s, path, SymmetryKind::Antipseudo);
}

CDBundle cd_antipseudo(const Schedule& s, double t, const DerivativeOptions& opts) {
  return cd_antipseudo(s, eigenpath_derivative(s, t, nullptr, opts));
}

Matrix cd_only_pseudo(const Schedule& s, double t, const DerivativeOptions& opts) {
  return cd_pseudo(s, t, opts).HcdOnly;
}

CDResidual verify_cd(const HamiltonianFn& h, const Trajectory& reference) {
  const auto& ts = reference.times;
  if (ts.size() < 3 || reference.states.size() != ts.size())
    fail(ErrorCode::GridMismatch, "verify_cd: reference needs >= 3 matching records");
  const double dt = uniform_step(ts);
  const auto& y = reference.states;
  const std::size_t n = ts.size();
  CDResidual out;
  for (std::size_t k = 0; k < n; ++k) {
    Vector dy;
    if (k == 0)
      dy = (-3.0 * y[0] + 4.0 * y[1] - y[2]) / (2.0 * dt);
    else if (k == n - 1)
      dy = (3.0 * y[n - 1] - 4.0 * y[n - 2] + y[n - 3]) / (2.0 * dt);
    else
      dy = (y[k + 1] - y[k - 1]) / (2.0 * dt);
    const Matrix hk = h(ts[k]);
    const double denom = hk.norm() * y[k].norm();
    if (!(denom > 0)) continue;
    const double r = (kI * dy - hk * y[k]).norm() / denom;
    if (r > out.max_residual) out.max_residual = r, out.worst_time = ts[k];
  }
  return out;
}

}  // namespace nhcd
