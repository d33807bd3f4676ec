// SPDX-License-Identifier: Apache-2.0
//
// Seeded random generators for property suites and experiment configs:
// Haar-ish unitaries, rank-k orthogonal projectors, projected-ONB
// Parseval frames, and strictly increasing weight sets. Deterministic
// given the caller's engine state.

#pragma once

#include <random>

#include "frameham/frame.hpp"

namespace frameham {

inline Mat random_gaussian_matrix(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Mat a(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) a(i, j) = Complex(gauss(rng), gauss(rng));
  return a;
}

/// Unitary from the QR factorization of a complex Gaussian matrix with
/// the R diagonal phases divided out.
inline Mat random_unitary(int d, std::mt19937_64& rng) {
  Mat a = random_gaussian_matrix(d, d, rng);
  Eigen::HouseholderQR<Mat> qr(a);
  Mat q = qr.householderQ();
  Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < d; ++i) {
    const Complex z = r(i, i);
    if (std::abs(z) > 0) q.col(i) *= z / std::abs(z);
  }
  return q;
}

/// Hermitian idempotent of rank k in C^d.
inline Mat random_projector(int d, int k, std::mt19937_64& rng) {
  Mat q = random_unitary(d, rng).leftCols(k);
  return symmetrize(q * q.adjoint());
}

/// Parseval frame of J = dim + excess vectors in C^dim, obtained by
/// projecting the standard ONB of C^J onto a random dim-dimensional
/// subspace.
inline Frame random_projected_onb(int dim, int excess, std::mt19937_64& rng) {
  const int j_count = dim + excess;
  Mat p = random_projector(j_count, dim, rng);
  return project_onb(j_count, p);
}

/// Strictly increasing weights with consecutive gaps drawn uniformly
/// from [gap_lo, gap_hi].
inline RealVec random_increasing_weights(int n, std::mt19937_64& rng,
                                         double start = 0.0, double gap_lo = 0.5,
                                         double gap_hi = 1.5) {
  std::uniform_real_distribution<double> gap(gap_lo, gap_hi);
  RealVec e(n);
  double cur = start;
  for (int i = 0; i < n; ++i) {
    cur += gap(rng);
    e(i) = cur;
  }
  return e;
}

inline Vec random_vector(int d, std::mt19937_64& rng) {
  return Vec(random_gaussian_matrix(d, 1, rng));
}

}  // namespace frameham
