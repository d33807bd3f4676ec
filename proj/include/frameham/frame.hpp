// SPDX-License-Identifier: Apache-2.0
//
// Parseval-frame construction and verification: frame operator defect,
// analysis/synthesis operators, excess, constructive Naimark dilation,
// projections of orthonormal bases, and the Riesz-pair families built
// from a contraction (or expansion) of an orthonormal basis.
//
// All statements about infinite families are realized at a finite
// truncation; the dimension always comes from the caller's data.

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>

#include "frameham/core.hpp"
#include "frameham/linalg.hpp"

namespace frameham {

inline constexpr double kParsevalTol = 1e-10;
inline constexpr double kRankRelTol = 1e-10;

/// Spectral norm of S - I where S = sum_j phi_j phi_j^* is the frame
/// operator. Zero exactly when the family is a Parseval frame of C^d.
inline double parseval_defect(const Frame& frame) {
  if (frame.size() == 0) throw std::invalid_argument("frame must be nonempty");
  Mat s = frame.vectors * frame.vectors.adjoint();
  s -= Mat::Identity(frame.dim(), frame.dim());
  return hermitian_norm(s);
}

/// Analysis operator: (theta f)_j = <phi_j, f>.
inline Vec analysis(const Frame& frame, const Vec& f) {
  if (f.size() != frame.dim())
    throw std::invalid_argument("analysis: vector dimension mismatch");
  return frame.vectors.adjoint() * f;
}

/// Synthesis operator: theta^* c = sum_j c_j phi_j.
inline Vec synthesis(const Frame& frame, const Vec& c) {
  if (c.size() != frame.size())
    throw std::invalid_argument("synthesis: coefficient length mismatch");
  return frame.vectors * c;
}

/// Number of members removable while keeping a complete family,
/// J - rank of the synthesis matrix. Requires the frame to span C^d.
inline int excess(const Frame& frame, double rank_rel_tol = kRankRelTol) {
  if (frame.size() == 0) throw std::invalid_argument("frame must be nonempty");
  const int rank = svd_rank(frame.vectors, rank_rel_tol);
  if (rank < frame.dim()) throw std::domain_error("incomplete family");
  return frame.size() - rank;
}

/// Gram matrix G_{jk} = <phi_j, phi_k>. For a Parseval frame this is the
/// orthogonal projector of l2(J) onto the analysis range R(theta_phi).
inline Mat gram(const Frame& frame) {
  return frame.vectors.adjoint() * frame.vectors;
}

/// Orthogonal projector onto R(theta_phi) in C^J; I minus the result
/// projects onto the synthesis kernel R(theta_psi).
inline Mat range_projector(const Frame& frame, double tol = kParsevalTol) {
  if (parseval_defect(frame) > tol)
    throw std::domain_error("range_projector: non-Parseval frame");
  return gram(frame);
}

/// Result of extending a Parseval frame of C^d to an orthonormal basis
/// of C^(d+m): h_j = phi_j (+) psi_j, with {psi_j} a Parseval frame of
/// the complement. The complement basis is determined only up to a
/// unitary on C^m.
struct DilationResult {
  Frame phi;  // input frame, d x J
  Frame psi;  // complement family, m x J
  Frame h;    // stacked orthonormal family, (d+m) x J
  int m = 0;
  double gram_residual = 0.0;  // max |Gram(h) - I|
};

namespace detail {

inline Vec random_complex_gaussian(Eigen::Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vec v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = Complex(gauss(rng), gauss(rng));
  return v;
}

}  // namespace detail

/// Completes the J x d analysis matrix (orthonormal columns for a PF) to
/// a J x J unitary by orthonormalizing random Gaussian columns against
/// the existing ones, re-orthogonalized twice. Deterministic for fixed
/// seed.
inline DilationResult naimark_dilate(const Frame& frame, double tol = kParsevalTol,
                                     std::uint64_t seed = 0x517cc1b727220a95ull) {
  if (parseval_defect(frame) > tol)
    throw std::domain_error("naimark_dilate: non-Parseval frame");
  const int d = frame.dim();
  const int j_count = frame.size();
  const int m = j_count - d;

  Mat u(j_count, j_count);
  u.leftCols(d) = frame.vectors.adjoint();  // theta, J x d
  std::mt19937_64 rng(seed);
  for (int col = d; col < j_count; ++col) {
    Vec g;
    double norm = 0.0;
    do {
      g = detail::random_complex_gaussian(j_count, rng);
      for (int pass = 0; pass < 2; ++pass)
        g -= u.leftCols(col) * (u.leftCols(col).adjoint() * g).eval();
      norm = g.norm();
    } while (norm < 1e-6);
    u.col(col) = g / norm;
  }

  DilationResult out;
  out.phi = frame;
  out.m = m;
  out.psi = Frame(Mat(u.rightCols(m).adjoint()));  // m x J, psi_j = conj(row j)
  Mat stacked(d + m, j_count);
  stacked.topRows(d) = frame.vectors;
  stacked.bottomRows(m) = out.psi.vectors;
  out.h = Frame(std::move(stacked));
  Mat gram_h = gram(out.h);
  gram_h -= Mat::Identity(j_count, j_count);
  out.gram_residual = gram_h.cwiseAbs().maxCoeff();
  return out;
}

/// {P e_n} expressed in an orthonormal basis of range(P), a Parseval
/// frame of the projected space. P must be a Hermitian idempotent.
inline Frame project_onb(int d, const Mat& p, double tol = 1e-12) {
  if (p.rows() != d || p.cols() != d)
    throw std::invalid_argument("project_onb: projector shape mismatch");
  if (hermitian_norm(Mat(0.5 * (p - p.adjoint()))) > tol ||
      hermitian_norm(Mat(symmetrize(p * p) - symmetrize(p))) > tol)
    throw std::domain_error("project_onb: input is not an orthogonal projector");
  const int k = static_cast<int>(std::lround(p.real().trace()));
  if (k == 0) throw std::domain_error("project_onb: zero projector");

  // Rank-revealing QR gives an orthonormal basis of range(P); fix the
  // phase of each basis column so that its largest entry is real
  // positive (P = I then reproduces the standard basis exactly).
  Eigen::ColPivHouseholderQR<Mat> qr(p);
  Mat q = qr.householderQ();
  Mat basis = q.leftCols(k);
  for (int c = 0; c < k; ++c) {
    Eigen::Index imax;
    basis.col(c).cwiseAbs().maxCoeff(&imax);
    const Complex z = basis(imax, c);
    if (std::abs(z) > 0) basis.col(c) *= std::abs(z) / z;
  }
  return Frame(Mat(basis.adjoint()));  // column n = basis^H e_n
}

enum class Prop15Branch { contractive, expansive };

/// The two Riesz bases and their duals generated by an invertible X with
/// either ||X^*X|| < 1 (contractive) or X^*X > I (expansive).
///
/// Contractive: family phi_n = X^* e_n, family_tilde = (I - X^*X)^{1/2} e_n,
/// duals psi_n = X^{-1} e_n and (I - X^*X)^{-1/2} e_n; the union
/// {family} u {family_tilde} is a Parseval frame. Expansive: the same
/// roles with psi_n = X^{-1} e_n as the family and (I - (X^*X)^{-1})
/// replacing (I - X^*X).
struct Prop15Families {
  Prop15Branch branch = Prop15Branch::contractive;
  Mat x;
  Frame family;
  Frame family_tilde;
  Frame dual;
  Frame dual_tilde;

  Frame union_frame() const { return concat(family, family_tilde); }
};

inline Prop15Families prop15_families(const Mat& x, double floor = 1e-12) {
  if (x.rows() != x.cols() || x.rows() == 0)
    throw std::invalid_argument("prop15_families: X must be square and nonempty");
  const Mat g = x.adjoint() * x;
  HermEig eig = hermitian_eig(g);
  const double lo = eig.values(0);
  const double hi = eig.values(eig.values.size() - 1);
  if (lo <= floor)
    throw std::invalid_argument("prop15_families: X is not invertible");

  Prop15Families out;
  out.x = x;
  auto herm_from = [&](const RealVec& diag) {
    return Mat(eig.vectors * diag.asDiagonal() * eig.vectors.adjoint());
  };

  if (hi <= 1.0 - floor) {
    out.branch = Prop15Branch::contractive;
    RealVec rem = (1.0 - eig.values.array()).matrix();
    out.family = Frame(Mat(x.adjoint()));
    out.family_tilde = Frame(herm_from(rem.array().sqrt().matrix()));
    out.dual = Frame(Mat(x.inverse()));
    out.dual_tilde = Frame(herm_from(rem.array().rsqrt().matrix()));
  } else if (lo >= 1.0 + floor) {
    out.branch = Prop15Branch::expansive;
    RealVec rem = (1.0 - eig.values.array().inverse()).matrix();
    out.family = Frame(Mat(x.inverse()));
    out.family_tilde = Frame(herm_from(rem.array().sqrt().matrix()));
    out.dual = Frame(Mat(x.adjoint()));
    out.dual_tilde = Frame(herm_from(rem.array().rsqrt().matrix()));
  } else {
    throw std::domain_error("prop15_families: mixed branch unsupported");
  }
  return out;
}

}  // namespace frameham
