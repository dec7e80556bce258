// Copyright 2026 The nhcd Authors.
// SPDX-License-Identifier: Apache-2.0

#include "nhcd/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>
#include <fmt/format.h>

namespace nhcd {

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

void require_square_finite(const Matrix& H, const char* who) {
  if (H.rows() != H.cols() || H.rows() == 0)
    fail(ErrorCode::DimensionMismatch, fmt::format("{}: matrix is {}x{}", who, H.rows(), H.cols()));
  if (!all_finite(H)) fail(ErrorCode::NonFinite, fmt::format("{}: non-finite entry", who));
}

double EigenSystem::biorthonormality_error() const {
  const Matrix g = lefts.adjoint() * rights;
  return max_abs(g - Matrix::Identity(g.rows(), g.cols()));
}

double EigenSystem::closure_error() const {
  const Matrix c = rights * lefts.adjoint();
  return max_abs(c - Matrix::Identity(c.rows(), c.cols()));
}

Matrix EigenSystem::spectral_sum() const {
  return rights * eigenvalues.asDiagonal() * lefts.adjoint();
}

namespace {

// Lexicographic (Re, Im) with a tolerance on the real part so that rounding
// noise on equal real parts does not shuffle the order.
std::vector<int> lexicographic_order(const Vector& values, double scale) {
  std::vector<int> idx(values.size());
  std::iota(idx.begin(), idx.end(), 0);
  const double tol = 1e-9 * std::max(scale, 1e-300);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
    const Complex x = values[a], y = values[b];
    if (std::abs(x.real() - y.real()) > tol) return x.real() < y.real();
    return x.imag() < y.imag();
  });
  return idx;
}

void fix_vector_gauge(Eigen::Ref<Vector> v) {
  v.normalize();
  const double big = v.cwiseAbs().maxCoeff();
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    if (std::abs(v[k]) >= 0.5 * big) {
      v *= std::conj(v[k]) / std::abs(v[k]);
      v[k] = std::abs(v[k]);
      return;
    }
  }
}

void check_separation(const Vector& values, double ep_guard, double hnorm) {
  const Eigen::Index n = values.size();
  double diameter = 0.0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      diameter = std::max(diameter, std::abs(values[i] - values[j]));
  // Absolute floor keeps a fully collapsed spectrum (diameter ~ 0) from
  // slipping through the relative test.
  const double guard = std::max(ep_guard * diameter, 1e-14 * std::max(hnorm, 1e-300));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      if (std::abs(values[i] - values[j]) <= guard)
        fail(ErrorCode::DegenerateSpectrum,
             fmt::format("eigenvalues {}{:+}i and {}{:+}i closer than {:.3g}", values[i].real(),
                         values[i].imag(), values[j].real(), values[j].imag(), guard));
}

}  // namespace

EigenPairs eig(const Matrix& H, const EigOptions& opts) {
  require_square_finite(H, "eig");
  const Eigen::Index n = H.rows();
  if (n > opts.max_dim)
    fail(ErrorCode::DimensionMismatch, fmt::format("eig: dim {} exceeds cap {}", n, opts.max_dim));

  const double hnorm = H.norm();
  EigenPairs out;
  if (n == 1) {
    out.values = H.diagonal();
    out.vectors = Matrix::Ones(1, 1);
    return out;
  }

  Eigen::ComplexEigenSolver<Matrix> solver(H, true);
  if (solver.info() != Eigen::Success) fail(ErrorCode::NonFinite, "eig: Schur iteration failed");
  const Vector raw_values = solver.eigenvalues();
  check_separation(raw_values, opts.ep_guard, hnorm);

  const auto order = lexicographic_order(raw_values, hnorm);
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex e = raw_values[order[k]];
    Vector v = solver.eigenvectors().col(order[k]);
    // One step of inverse iteration when the Schur vectors are a bit loose.
    if ((H * v - e * v).norm() > 1e-13 * std::max(hnorm, 1e-300) * v.norm()) {
      const Complex shift = e + Complex(1e-13 * std::max(hnorm, 1e-300), 0.0);
      const Matrix a = H - shift * Matrix::Identity(n, n);
      Vector w = a.partialPivLu().solve(v);
      if (all_finite(w) && w.norm() > 0) v = w;
    }
    fix_vector_gauge(v);
    out.values[k] = e;
    out.vectors.col(k) = v;
  }
  return out;
}

EigenPairs left_eigensystem(const Matrix& H, const EigOptions& opts) {
  require_square_finite(H, "left_eigensystem");
  return eig(H.adjoint(), opts);
}

EigenSystem binormalize(const Matrix& rights, const Matrix& lefts, const Vector& eigenvalues,
                        double ep_guard) {
  if (rights.rows() != lefts.rows() || rights.cols() != lefts.cols() ||
      rights.cols() != eigenvalues.size())
    fail(ErrorCode::DimensionMismatch, "binormalize: shape mismatch");
  EigenSystem es;
  es.eigenvalues = eigenvalues;
  es.rights = rights;
  es.lefts = lefts;
  for (Eigen::Index k = 0; k < rights.cols(); ++k) {
    const Complex s = lefts.col(k).dot(rights.col(k));
    const double scale = lefts.col(k).norm() * rights.col(k).norm();
    if (!(std::abs(s) > ep_guard * scale))
      fail(ErrorCode::SelfOrthogonal,
           fmt::format("binormalize: |<l|r>| = {:.3g} for state {} (EP proximity)", std::abs(s), k));
    // +0.0 turns a signed-zero imaginary part into +0 so that a negative real
    // overlap always lands on +i, never on the other side of the cut
    const Complex q = std::sqrt(Complex(s.real(), s.imag() + 0.0));
    es.rights.col(k) /= q;
    es.lefts.col(k) /= std::conj(q);
  }
  return es;
}

EigenSystem biorthonormal_eigensystem(const Matrix& H, const EigOptions& opts) {
  const EigenPairs r = eig(H, opts);
  const EigenPairs l = left_eigensystem(H, opts);
  const Eigen::Index n = r.values.size();
  Matrix lefts(n, n);
  std::vector<bool> used(n, false);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index best = -1;
    double dist = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (used[j]) continue;
      const double d = std::abs(l.values[j] - std::conj(r.values[k]));
      if (best < 0 || d < dist) best = j, dist = d;
    }
    used[best] = true;
    lefts.col(k) = l.vectors.col(best);
  }
  return binormalize(r.vectors, lefts, r.values, opts.ep_guard);
}

EigenSystem match_to_previous(const EigenSystem& current, const EigenSystem& previous,
                              GaugeFix fix) {
  const int n = current.size();
  if (previous.size() != n || current.rights.rows() != previous.rights.rows())
    fail(ErrorCode::DimensionMismatch, "match_to_previous: dimension mismatch");

  const Matrix overlaps = previous.lefts.adjoint() * current.rights;
  std::vector<int> perm(n);
  std::vector<bool> taken(n, false);
  for (int i = 0; i < n; ++i) {
    int best = 0;
    double first = -1.0, second = 0.0;
    for (int j = 0; j < n; ++j) {
      const double a = std::abs(overlaps(i, j));
      if (a > first) {
        second = std::max(second, first);
        first = a;
        best = j;
      } else {
        second = std::max(second, a);
      }
    }
    if (n > 1 && !(first >= 2.0 * second))
      fail(ErrorCode::AmbiguousMatching,
           fmt::format("match_to_previous: row {} best overlap {:.3g} vs runner-up {:.3g}", i, first,
                       second));
    if (taken[best]) fail(ErrorCode::AmbiguousMatching, "match_to_previous: not a permutation");
    taken[best] = true;
    perm[i] = best;
  }

  std::vector<int> inverse(n);
  for (int i = 0; i < n; ++i) inverse[perm[i]] = i;

  EigenSystem out;
  out.eigenvalues.resize(n);
  out.rights.resize(current.rights.rows(), n);
  out.lefts.resize(current.lefts.rows(), n);
  for (int i = 0; i < n; ++i) {
    Complex c(1.0, 0.0);
    if (fix == GaugeFix::Phase) {
      const Complex o = overlaps(i, perm[i]);
      c = std::conj(o) / std::abs(o);
    }
    out.eigenvalues[i] = current.eigenvalues[perm[i]];
    out.rights.col(i) = c * current.rights.col(perm[i]);
    out.lefts.col(i) = c * current.lefts.col(perm[i]);
  }
  if (!current.pairing.empty()) {
    out.pairing.resize(n);
    for (int i = 0; i < n; ++i) out.pairing[i] = inverse[current.pairing[perm[i]]];
  }
  return out;
}

Vector decompose(const Vector& psi, const EigenSystem& es) {
  if (psi.size() != es.lefts.rows())
    fail(ErrorCode::DimensionMismatch, "decompose: state dimension mismatch");
  return es.lefts.adjoint() * psi;
}

Vector reconstruct(const Vector& coeffs, const EigenSystem& es) {
  if (coeffs.size() != es.rights.cols())
    fail(ErrorCode::DimensionMismatch, "reconstruct: coefficient count mismatch");
  return es.rights * coeffs;
}

}  // namespace nhcd
