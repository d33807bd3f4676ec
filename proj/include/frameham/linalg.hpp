// SPDX-License-Identifier: Apache-2.0
//
// Small dense linear-algebra helpers on top of Eigen: Hermitian
// eigendecompositions, matrix powers via eigendecomposition, SVD-based
// rank detection and spectral norms.

#pragma once

#include <Eigen/Dense>

#include <stdexcept>

#include "frameham/core.hpp"

namespace frameham {

struct HermEig {
  RealVec values;  // ascending
  Mat vectors;     // columns
};

inline HermEig hermitian_eig(const Mat& a) {
  Eigen::SelfAdjointEigenSolver<Mat> es(a);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("hermitian eigendecomposition failed");
  return {es.eigenvalues(), es.eigenvectors()};
}

inline RealVec hermitian_eigenvalues(const Mat& a) {
  Eigen::SelfAdjointEigenSolver<Mat> es(a, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("hermitian eigendecomposition failed");
  return es.eigenvalues();
}

/// Spectral norm of a Hermitian matrix (largest |eigenvalue|).
inline double hermitian_norm(const Mat& a) {
  if (a.rows() == 0) return 0.0;
  RealVec ev = hermitian_eigenvalues(a);
  return std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
}

/// Largest singular value of a general matrix.
inline double spectral_norm(const Mat& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0.0;
  Eigen::BDCSVD<Mat> svd(a);
  return svd.singularValues()(0);
}

/// Rank with singular values below rel_tol * sigma_max counted as zero.
inline int svd_rank(const Mat& a, double rel_tol = 1e-10) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  Eigen::BDCSVD<Mat> svd(a);
  const RealVec& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  const double cut = rel_tol * s(0);
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > cut) ++r;
  return r;
}

/// A^p for Hermitian A through its eigendecomposition. Every eigenvalue
/// must exceed `floor`; otherwise the power is ill-defined at the
/// requested accuracy and a domain_error is thrown.
inline Mat hermitian_power(const Mat& a, double p, double floor = 1e-12) {
  HermEig eig = hermitian_eig(a);
  RealVec powers(eig.values.size());
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    if (eig.values(i) <= floor)
      throw std::domain_error("matrix power: eigenvalue below floor");
    powers(i) = std::pow(eig.values(i), p);
  }
  return eig.vectors * powers.asDiagonal() * eig.vectors.adjoint();
}

/// A^p on the range of a Hermitian PSD matrix: eigenvalues at or below
/// `zero_tol` are treated as exactly zero and map to zero (pseudoinverse
/// convention for negative powers).
inline Mat hermitian_pinv_power(const Mat& a, double p, double zero_tol = 1e-12) {
  HermEig eig = hermitian_eig(a);
  RealVec powers(eig.values.size());
  for (Eigen::Index i = 0; i < eig.values.size(); ++i)
    powers(i) = (eig.values(i) <= zero_tol) ? 0.0 : std::pow(eig.values(i), p);
  return eig.vectors * powers.asDiagonal() * eig.vectors.adjoint();
}

/// 2-norm condition number of a Hermitian PSD matrix; +inf when
/// numerically singular.
inline double hermitian_cond(const Mat& a) {
  RealVec ev = hermitian_eigenvalues(a);
  const double lo = ev(0);
  const double hi = ev(ev.size() - 1);
  if (lo <= 0.0) return std::numeric_limits<double>::infinity();
  return hi / lo;
}

/// Exactly Hermitian symmetrization (A + A*)/2.
inline Mat symmetrize(const Mat& a) { return 0.5 * (a + a.adjoint()); }

}  // namespace frameham
