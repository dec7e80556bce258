// Copyright 2026 The nhcd Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef NHCD_LINALG_HPP
#define NHCD_LINALG_HPP

#include <vector>

#include "nhcd/error.hpp"
#include "nhcd/types.hpp"

namespace nhcd {

struct EigOptions {
  // Two eigenvalues closer than ep_guard * (spectral diameter) are treated
  // as coalescing and rejected.
  double ep_guard = 1e-8;
  int max_dim = 8;
};

/// Eigenvalues with unit-norm right eigenvectors stored as columns.
struct EigenPairs {
  Vector values;
  Matrix vectors;
};

/// One time snapshot of a biorthonormal eigensystem. State n is column n of
/// rights/lefts. pairing[n] is the partner index under the symmetry rule
/// (empty when no symmetry was used).
struct EigenSystem {
  Vector eigenvalues;
  Matrix rights;
  Matrix lefts;
  std::vector<int> pairing;

  int size() const { return static_cast<int>(eigenvalues.size()); }
  /// max |<l_m|r_n> - delta_mn|
  double biorthonormality_error() const;
  /// max |sum_n r_n l_n^H - I|
  double closure_error() const;
  /// sum_n |r_n> E_n <l_n|
  Matrix spectral_sum() const;
};

/// Right eigenpairs ordered by (Re, Im). Each vector has unit norm and its
/// first component with modulus >= half the largest is real positive.
EigenPairs eig(const Matrix& H, const EigOptions& opts = {});

/// Eigenpairs of H^dagger. The values are conj(E_n) up to ordering.
EigenPairs left_eigensystem(const Matrix& H, const EigOptions& opts = {});

/// Scale each pair by the principal square root of <l_n|r_n> so the overlaps
/// become delta_mn. Lefts must already be index-matched to rights.
EigenSystem binormalize(const Matrix& rights, const Matrix& lefts, const Vector& eigenvalues,
                        double ep_guard = 1e-8);

/// Rights from eig(H), lefts from eig(H^dagger) matched by conjugate
/// eigenvalue, then binormalized.
EigenSystem biorthonormal_eigensystem(const Matrix& H, const EigOptions& opts = {});

enum class GaugeFix {
  Phase,  // reorder and make <l_n(prev)|r_n(cur)> real positive
  None,   // reorder only, keep the supplied gauge
};

/// Reorder `current` to follow `previous` by maximal |<l_m(prev)|r_n(cur)>|.
EigenSystem match_to_previous(const EigenSystem& current, const EigenSystem& previous,
                              GaugeFix fix = GaugeFix::Phase);

/// c_n = <l_n|psi>
Vector decompose(const Vector& psi, const EigenSystem& es);
/// sum_n c_n |r_n>
Vector reconstruct(const Vector& coeffs, const EigenSystem& es);

/// max_{i,j} |a_ij|
double max_abs(const Matrix& m);

void require_square_finite(const Matrix& H, const char* who);

}  // namespace nhcd

#endif  // NHCD_LINALG_HPP
