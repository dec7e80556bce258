// Copyright 2026 The nhcd Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef NHCD_CD_HPP
#define NHCD_CD_HPP

#include "nhcd/schedule.hpp"
#include "nhcd/trajectory.hpp"

namespace nhcd {

struct CDBundle {
  Matrix H0;       // sum |r_n> E_n <l_n|
  Matrix H1;       // i sum (|dr_n><l_n| - <l_n|dr_n> |r_n><l_n|)
  Matrix Htotal;   // H0 + H1
  Matrix HcdOnly;  // i sum |dr_n><l_n|
};

/// Raw assembly from an eigensystem and right-eigenvector derivatives. No
/// checks beyond shapes.
CDBundle assemble_cd(const EigenSystem& es, const Matrix& d_rights);

/// Orthonormal (Hermitian) eigenpath. NotOrthonormal otherwise.
CDBundle cd_hermitian(const EigenSystem& es, const Matrix& d_rights, double tol = 1e-9);

/// Binormalized eigenpath. NotBinormalized otherwise.
CDBundle cd_generic(const EigenSystem& es, const Matrix& d_rights, double tol = 1e-9);

/// Lefts rebuilt from rights through U (pairing E <-> conj E), derivatives
/// from the gauge-aligned stencil unless a path is supplied.
CDBundle cd_pseudo(const Schedule& s, double t, const DerivativeOptions& opts = {});
CDBundle cd_pseudo(const Schedule& s, const EigenPath& path);

/// Same with the pairing E <-> -conj E.
CDBundle cd_antipseudo(const Schedule& s, double t, const DerivativeOptions& opts = {});
CDBundle cd_antipseudo(const Schedule& s, const EigenPath& path);

/// i sum |dr_n><l_n| with U-built lefts.
Matrix cd_only_pseudo(const Schedule& s, double t, const DerivativeOptions& opts = {});

struct CDResidual {
  double max_residual = 0.0;
  double worst_time = 0.0;
};

/// max_k |i dpsi/dt - H(t_k) psi| / (|H| |psi|) with dpsi/dt by second-order
/// central differences on the reference's uniform grid (one-sided at ends).
CDResidual verify_cd(const HamiltonianFn& h, const Trajectory& reference);

}  // namespace nhcd

#endif  // NHCD_CD_HPP
