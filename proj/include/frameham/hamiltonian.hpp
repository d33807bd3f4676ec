// SPDX-License-Identifier: Apache-2.0
//
// Frame-generated Hamiltonians H = sum_j E_j <phi_j, .> phi_j and their
// spectral diagnostics: dense eigendecomposition, quasi-eigenvalue
// tests through the Naimark complement, point-spectrum certificates via
// the analysis-range projector, the Riesz-split factorization
// S0^{1/2} H0 S0^{1/2} + (I-S0)^{1/2} H1 (I-S0)^{1/2}, the complement
// operator B, and truncation-based domain growth diagnostics.

#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <vector>

#include "frameham/frame.hpp"
#include "frameham/linalg.hpp"

namespace frameham {

using Weights = RealVec;

/// Dense Hermitian matrix assembled from (frame, weights), with the
/// generating data kept alongside.
struct FrameHamiltonian {
  Mat h;
  Frame frame;
  Weights weights;

  double norm() const { return hermitian_norm(h); }
};

/// H = sum_j E_j phi_j phi_j^*, symmetrized so that H = H^* exactly.
/// The rank-one terms are accumulated in a canonical order (sorted by
/// weight, then by column entries) so that jointly permuting
/// (phi_j, E_j) pairs leaves the result unchanged entrywise.
inline FrameHamiltonian assemble(const Frame& frame, const Weights& weights) {
  if (weights.size() != frame.size())
    throw std::invalid_argument("assemble: weight/frame length mismatch");
  const int j_count = frame.size();

  std::vector<int> order(static_cast<std::size_t>(j_count));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (weights(a) != weights(b)) return weights(a) < weights(b);
    const auto ca = frame.vectors.col(a);
    const auto cb = frame.vectors.col(b);
    for (Eigen::Index i = 0; i < ca.size(); ++i) {
      if (ca(i).real() != cb(i).real()) return ca(i).real() < cb(i).real();
      if (ca(i).imag() != cb(i).imag()) return ca(i).imag() < cb(i).imag();
    }
    return false;
  });

  Mat sorted(frame.dim(), j_count);
  RealVec sorted_w(j_count);
  for (int j = 0; j < j_count; ++j) {
    sorted.col(j) = frame.vectors.col(order[static_cast<std::size_t>(j)]);
    sorted_w(j) = weights(order[static_cast<std::size_t>(j)]);
  }
  Mat a = sorted * sorted_w.asDiagonal() * sorted.adjoint();
  return {symmetrize(a), frame, weights};
}

struct SpectrumReport {
  RealVec eigenvalues;  // ascending
  Mat eigenvectors;     // unit columns aligned with eigenvalues
  RealVec residuals;    // ||H v - lambda v|| per pair
};

/// Full dense eigendecomposition with per-pair residuals; the
/// brute-force oracle everything else is checked against.
inline SpectrumReport dense_spectrum(const Mat& h) {
  HermEig eig = hermitian_eig(h);
  SpectrumReport rep;
  rep.eigenvalues = eig.values;
  rep.eigenvectors = eig.vectors;
  rep.residuals.resize(eig.values.size());
  for (Eigen::Index i = 0; i < eig.values.size(); ++i)
    rep.residuals(i) = (h * eig.vectors.col(i) - eig.values(i) * eig.vectors.col(i)).norm();
  return rep;
}

inline SpectrumReport dense_spectrum(const FrameHamiltonian& ham) {
  return dense_spectrum(ham.h);
}

/// Outcome of the quasi-eigenvalue test at one frame index: E_n is an
/// eigenvalue of H with eigenvector phi_n iff sum_j E_j <psi_j, psi_n>
/// phi_j vanishes (the complement-side condition, evaluated at finite
/// truncation).
struct QuasiEigenReport {
  bool is_eigenpair = false;
  double residual = 0.0;              // || sum_j E_j <psi_j, psi_n> phi_j ||
  double weighted_overlap_sum = 0.0;  // sum_j E_j^2 |<psi_j, psi_n>|^2
  double eigen_residual = 0.0;        // || H phi_n - E_n phi_n ||
};

inline QuasiEigenReport quasi_eigenpair_check(const DilationResult& dilation,
                                              const Weights& weights, int index,
                                              double tol = 1e-9) {
  const int j_count = dilation.phi.size();
  if (weights.size() != j_count)
    throw std::invalid_argument("quasi_eigenpair_check: weight length mismatch");
  if (index < 0 || index >= j_count)
    throw std::out_of_range("quasi_eigenpair_check: index out of range");

  QuasiEigenReport rep;
  Vec overlaps = dilation.m > 0
                     ? Vec(dilation.psi.vectors.adjoint() * dilation.psi.vectors.col(index))
                     : Vec(Vec::Zero(j_count));
  rep.weighted_overlap_sum =
      (weights.array().square() * overlaps.array().abs2()).sum();
  Vec weighted = (weights.array() * overlaps.array()).matrix();
  rep.residual = (dilation.phi.vectors * weighted).norm();
  rep.is_eigenpair = rep.residual <= tol;

  const Mat h = assemble(dilation.phi, weights).h;
  const Vec phi_n = dilation.phi.vectors.col(index);
  rep.eigen_residual = (h * phi_n - weights(index) * phi_n).norm();
  return rep;
}

/// Witness that mu belongs to the point spectrum: a coefficient
/// sequence c in R(theta_phi) with diag(E - mu) c orthogonal to
/// R(theta_phi), together with the synthesized eigenvector.
struct EigCertificate {
  double mu = 0.0;
  Vec c;                         // in R(theta_phi), unit scale
  double defect_in_range = 0.0;  // ||(I - P_R) c||
  double defect_orthogonal = 0.0;  // ||P_R diag(E - mu) c||
  Vec eigvec;                    // synthesis of c
};

/// Searches the nullspace of P_R diag(E - mu) P_R restricted to
/// R(theta_phi). Returns nothing when the smallest singular value stays
/// above the relative threshold or the synthesized vector fails the
/// eigen-residual check.
inline std::optional<EigCertificate> point_spectrum_certificate(
    const Frame& frame, const Weights& weights, double mu, double rel_tol = 1e-9) {
  if (weights.size() != frame.size())
    throw std::invalid_argument("point_spectrum_certificate: weight length mismatch");
  if (parseval_defect(frame) > kParsevalTol)
    throw std::domain_error("point_spectrum_certificate: non-Parseval frame");

  const Mat theta = frame.vectors.adjoint();  // J x d
  RealVec shifted = (weights.array() - mu).matrix();
  // Restriction of P_R diag(E - mu) P_R to R(theta_phi), in the
  // orthonormal column coordinates of theta.
  const Mat restricted = symmetrize(theta.adjoint() * shifted.asDiagonal() * theta);
  HermEig eig = hermitian_eig(restricted);

  Eigen::Index imin = 0;
  double smin = std::numeric_limits<double>::infinity();
  double smax = 0.0;
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    const double mag = std::abs(eig.values(i));
    if (mag < smin) {
      smin = mag;
      imin = i;
    }
    smax = std::max(smax, mag);
  }
  if (smin > rel_tol * std::max(1.0, smax)) return std::nullopt;

  EigCertificate cert;
  cert.mu = mu;
  const Vec w = eig.vectors.col(imin);
  cert.c = theta * w;
  const Mat p_r = gram(frame);
  cert.defect_in_range = (cert.c - p_r * cert.c).norm();
  cert.defect_orthogonal = (p_r * (shifted.asDiagonal() * cert.c)).norm();
  cert.eigvec = synthesis(frame, cert.c);

  const Mat h = assemble(frame, weights).h;
  const double scale = std::max(1.0, hermitian_norm(h)) * cert.eigvec.norm();
  if ((h * cert.eigvec - mu * cert.eigvec).norm() > 1e-8 * scale) return std::nullopt;
  return cert;
}

/// Rebuilds H through the split of Prop.-style Riesz decomposition:
/// J0 indexes a Riesz basis of C^d (Gram condition number below
/// cond_limit), J1 the remaining frame sequence. The two factors use the
/// exact and the pseudoinverse square root of S0 and I - S0.
inline FrameHamiltonian riesz_split_assemble(const Frame& frame, const Weights& weights,
                                             const std::vector<int>& j0,
                                             const std::vector<int>& j1,
                                             double cond_limit = 1e8) {
  if (weights.size() != frame.size())
    throw std::invalid_argument("riesz_split_assemble: weight length mismatch");
  std::vector<char> seen(static_cast<std::size_t>(frame.size()), 0);
  for (int idx : j0) {
    if (idx < 0 || idx >= frame.size() || seen[static_cast<std::size_t>(idx)]++)
      throw std::invalid_argument("riesz_split_assemble: J0/J1 must partition the labels");
  }
  for (int idx : j1) {
    if (idx < 0 || idx >= frame.size() || seen[static_cast<std::size_t>(idx)]++)
      throw std::invalid_argument("riesz_split_assemble: J0/J1 must partition the labels");
  }
  for (char c : seen)
    if (!c) throw std::invalid_argument("riesz_split_assemble: J0/J1 must partition the labels");

  const int d = frame.dim();
  Mat phi0(d, static_cast<Eigen::Index>(j0.size()));
  RealVec e0(static_cast<Eigen::Index>(j0.size()));
  for (std::size_t k = 0; k < j0.size(); ++k) {
    phi0.col(static_cast<Eigen::Index>(k)) = frame.vectors.col(j0[k]);
    e0(static_cast<Eigen::Index>(k)) = weights(j0[k]);
  }
  if (static_cast<int>(j0.size()) != d ||
      hermitian_cond(Mat(phi0.adjoint() * phi0)) >= cond_limit)
    throw std::domain_error("riesz_split_assemble: not a Riesz subfamily");

  const Mat s0 = symmetrize(phi0 * phi0.adjoint());
  const Mat s0_half = hermitian_power(s0, 0.5);
  const Mat s0_inv_half = hermitian_power(s0, -0.5);
  const Mat basis0 = s0_inv_half * phi0;  // ONB of C^d
  const Mat h_e0 = symmetrize(basis0 * e0.asDiagonal() * basis0.adjoint());
  const Mat a0 = s0_half * h_e0 * s0_half;

  Mat a1 = Mat::Zero(d, d);
  if (!j1.empty()) {
    Mat phi1(d, static_cast<Eigen::Index>(j1.size()));
    RealVec e1(static_cast<Eigen::Index>(j1.size()));
    for (std::size_t k = 0; k < j1.size(); ++k) {
      phi1.col(static_cast<Eigen::Index>(k)) = frame.vectors.col(j1[k]);
      e1(static_cast<Eigen::Index>(k)) = weights(j1[k]);
    }
    const Mat rem = symmetrize(Mat::Identity(d, d) - s0);
    const Mat rem_half = hermitian_pinv_power(rem, 0.5);
    const Mat rem_pinv_half = hermitian_pinv_power(rem, -0.5);
    const Mat basis1 = rem_pinv_half * phi1;  // PF of range(I - S0)
    const Mat h_e1 = symmetrize(basis1 * e1.asDiagonal() * basis1.adjoint());
    a1 = rem_half * h_e1 * rem_half;
  }

  return {symmetrize(a0 + a1), frame, weights};
}

/// B = Psi^* diag(E) Theta : C^d -> C^m, the complement-side image of
/// the weighted analysis coefficients, together with its spectral norm.
struct BOperator {
  Mat b;  // m x d
  double norm = 0.0;
};

inline BOperator b_operator_matrix(const DilationResult& dilation, const Weights& weights) {
  if (weights.size() != dilation.phi.size())
    throw std::invalid_argument("b_operator_matrix: weight length mismatch");
  const Mat theta = dilation.phi.vectors.adjoint();          // J x d
  const Mat psi_analysis = dilation.psi.vectors.adjoint();   // J x m
  BOperator out;
  out.b = psi_analysis.adjoint() * weights.asDiagonal() * theta;
  out.norm = spectral_norm(out.b);
  return out;
}

enum class TailClass { bounded, unbounded };

/// Diagnostic record: sup |E_j| over the given data plus the caller's
/// declared asymptotic class (finite data cannot decide it).
struct BoundednessReport {
  double sup_abs = 0.0;
  TailClass declared = TailClass::bounded;
};

inline BoundednessReport classify_boundedness(const Weights& weights, TailClass declared) {
  BoundednessReport rep;
  rep.declared = declared;
  rep.sup_abs = weights.size() > 0 ? weights.cwiseAbs().maxCoeff() : 0.0;
  return rep;
}

/// Partial sums sum_{j<N} E_j^2 |<phi_j, f>|^2 on a geometric schedule,
/// with a log-log fitted growth exponent. A positive exponent beyond
/// `growth_tol` flags divergence of the corresponding domain series.
struct GrowthTrace {
  std::vector<int> checkpoints;
  std::vector<double> partial_sums;
  double exponent = 0.0;
  bool diverging = false;
};

/// `family(j)` must yield the j-th (phi_j, E_j) pair, 0-based, for
/// j < n_terms.
inline GrowthTrace domain_growth_diagnostic(
    const std::function<std::pair<Vec, double>(int)>& family, const Vec& f,
    int n_terms, int schedule_start = 16, double growth_tol = 0.05) {
  if (n_terms <= 0) throw std::invalid_argument("domain_growth_diagnostic: empty schedule");

  GrowthTrace trace;
  std::vector<int> schedule;
  for (int n = std::min(schedule_start, n_terms); n < n_terms; n *= 2)
    schedule.push_back(n);
  schedule.push_back(n_terms);

  double running = 0.0;
  int emitted = 0;
  std::size_t next = 0;
  for (int j = 0; j < n_terms; ++j) {
    auto [phi, e] = family(j);
    if (phi.size() != f.size())
      throw std::invalid_argument("domain_growth_diagnostic: dimension mismatch");
    const double coeff = std::abs(phi.dot(f));
    running += e * e * coeff * coeff;
    ++emitted;
    if (next < schedule.size() && emitted == schedule[next]) {
      trace.checkpoints.push_back(emitted);
      trace.partial_sums.push_back(running);
      ++next;
    }
  }

  // Least-squares slope of log S against log N over positive sums.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int count = 0;
  for (std::size_t i = 0; i < trace.checkpoints.size(); ++i) {
    if (trace.partial_sums[i] <= 0.0) continue;
    const double lx = std::log(static_cast<double>(trace.checkpoints[i]));
    const double ly = std::log(trace.partial_sums[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++count;
  }
  if (count >= 2) {
    const double denom = count * sxx - sx * sx;
    trace.exponent = denom != 0.0 ? (count * sxy - sx * sy) / denom : 0.0;
  }
  trace.diverging = trace.exponent > growth_tol;
  return trace;
}

}  // namespace frameham
