// SPDX-License-Identifier: Apache-2.0
//
// Core value types shared by the frameham library: dense complex
// vectors/matrices (Eigen) and the Frame type, a finite ordered family
// of equal-dimension vectors stored as the columns of its synthesis
// matrix.
//
// Convention used throughout: inner products are conjugate-linear in
// the FIRST argument, <u, v> = sum_i conj(u_i) v_i, which matches
// Eigen's u.dot(v).

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace frameham {

inline constexpr const char* kVersion = "0.1.0";

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RealMat = Eigen::MatrixXd;
using RealVec = Eigen::VectorXd;

/// Finite ordered family of vectors in C^d, all of the same dimension.
/// Column j of `vectors` is the j-th member. `labels` carries ordinal
/// bookkeeping only; operations address members by column position.
struct Frame {
  Mat vectors;              // d x J, column j = phi_j
  std::vector<int> labels;  // length J

  Frame() = default;

  explicit Frame(Mat m) : vectors(std::move(m)) {
    labels.resize(static_cast<std::size_t>(vectors.cols()));
    std::iota(labels.begin(), labels.end(), 0);
  }

  /// Builds a frame from a list of member vectors; throws on
  /// inconsistent dimensions.
  static Frame from_vectors(const std::vector<Vec>& members) {
    if (members.empty()) throw std::invalid_argument("frame must be nonempty");
    const Eigen::Index d = members.front().size();
    Mat m(d, static_cast<Eigen::Index>(members.size()));
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (members[j].size() != d)
        throw std::invalid_argument("dimension mismatch among frame vectors");
      m.col(static_cast<Eigen::Index>(j)) = members[j];
    }
    return Frame(std::move(m));
  }

  int dim() const { return static_cast<int>(vectors.rows()); }
  int size() const { return static_cast<int>(vectors.cols()); }
  Vec member(int j) const { return vectors.col(j); }

  /// The standard orthonormal basis of C^d as a frame.
  static Frame onb(int d) { return Frame(Mat::Identity(d, d)); }
};

/// Concatenates two frames of equal dimension (union family).
inline Frame concat(const Frame& a, const Frame& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("dimension mismatch among frame vectors");
  Mat m(a.vectors.rows(), a.vectors.cols() + b.vectors.cols());
  m << a.vectors, b.vectors;
  return Frame(std::move(m));
}

}  // namespace frameham
