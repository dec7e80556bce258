// Copyright 2026 The nhcd Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef NHCD_SYMMETRY_HPP
#define NHCD_SYMMETRY_HPP

#include <vector>

#include "nhcd/linalg.hpp"

namespace nhcd {

// pseudo:     H^dagger =  U H U^dagger, partners E <-> conj(E)
// antipseudo: H^dagger = -U H U^dagger, partners E <-> -conj(E)
enum class SymmetryKind { Pseudo, Antipseudo };

struct SymmetrySpec {
  Matrix U;
  SymmetryKind kind = SymmetryKind::Pseudo;
  // u_n with U_n = u_n U; filled by left_from_right, may be empty.
  Vector state_scalars;
};

struct SymmetryCheck {
  bool holds = false;
  double residual = 0.0;  // Frobenius residual relative to ||H||_F
};

/// Throws BadSymmetryMatrix unless U is unitary and Hermitian to 1e-10.
void validate_symmetry_matrix(const Matrix& U);

SymmetryCheck check_pseudo(const Matrix& H, const Matrix& U, double tol = 1e-9);
SymmetryCheck check_antipseudo(const Matrix& H, const Matrix& U, double tol = 1e-9);
SymmetryCheck check_symmetry(const Matrix& H, const SymmetrySpec& spec, double tol = 1e-9);

/// Partner map under the kind's conjugation rule. Always an involution.
std::vector<int> pair_spectrum(const Vector& eigenvalues, SymmetryKind kind, double tol = 1e-8);

struct LeftConstruction {
  Matrix lefts;
  Vector state_scalars;
};

/// Lefts built as conj(u_n) U |r_partner>, with u_n = 1/<r_partner|U|r_n>,
/// so that <l_n|r_n> = 1 for whatever normalization the rights carry.
LeftConstruction left_from_right(const Matrix& rights, const std::vector<int>& pairing,
                                 const Matrix& U, double ep_guard = 1e-8);

/// eig(H) for the rights, pairing from the spectrum, lefts through U.
/// Never solves the adjoint eigenproblem.
EigenSystem symmetric_eigensystem(const Matrix& H, const SymmetrySpec& spec,
                                  const EigOptions& opts = {});

struct HermitianSplit {
  Matrix real_part;  // (H + H^dagger)/2
  Matrix imag_part;  // (H - H^dagger)/(2i)
};

HermitianSplit hermitian_split(const Matrix& H);

struct SelfNormalizedReport {
  bool self_normalized = false;
  double residual_real = 0.0;  // pseudo: |H_R psi - E psi|,   antipseudo: |H_R psi|
  double residual_imag = 0.0;  // pseudo: |H_I psi|,           antipseudo: |H_I psi + iE psi|
  Complex self_overlap;        // <psi|psi>
  double eigen_residual = 0.0;
};

/// A self-normalized eigenstate is its own left partner, so on top of the
/// two split conditions it must carry unit norm (|<psi|psi> - 1| <= 10 tol).
SelfNormalizedReport check_self_normalized(const Matrix& H, const Matrix& U, const Vector& state,
                                           Complex eigenvalue, SymmetryKind kind,
                                           double tol = 1e-9);

}  // namespace nhcd

#endif  // NHCD_SYMMETRY_HPP
