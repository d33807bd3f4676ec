// SPDX-License-Identifier: Apache-2.0
//
// The blockwise Casazza-Christensen Parseval frame and its spectral
// machinery: per-block frames phi_j = e_j - (1/n) sum_i e_i with the
// normalized sum vector appended, the rank-one complement family, the
// secular equation sum_i 1/(E_i - mu) = 0 with interlaced roots and
// closed-form eigenvectors, truncated bosonic ladder operators, the
// vertical maps V_{n+1}, and finite direct sums of blocks.
//
// Block indices j run 1..n+1 in the mathematical convention; matrix and
// column positions are 0-based.

#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "frameham/frame.hpp"
#include "frameham/hamiltonian.hpp"

namespace frameham::cc {

/// The n+1 frame vectors of the block of dimension n. For n = 1 the
/// first member is the zero vector (the formula gives e_1 - e_1); it is
/// kept so that indices line up with the weights.
inline Frame cc_frame(int n) {
  if (n < 1) throw std::invalid_argument("cc_frame: n must be at least 1");
  Mat v = Mat::Zero(n, n + 1);
  for (int j = 0; j < n; ++j) {
    v.col(j) = Vec::Constant(n, Complex(-1.0 / n, 0.0));
    v(j, j) += 1.0;
  }
  v.col(n) = Vec::Constant(n, Complex(1.0 / std::sqrt(double(n)), 0.0));
  return Frame(std::move(v));
}

/// The complement family in C^1: psi_j = 1/sqrt(n) for j <= n and
/// psi_{n+1} = 0.
inline Frame cc_complementary(int n) {
  if (n < 1) throw std::invalid_argument("cc_complementary: n must be at least 1");
  Mat v = Mat::Zero(1, n + 1);
  v.leftCols(n).setConstant(Complex(1.0 / std::sqrt(double(n)), 0.0));
  return Frame(std::move(v));
}

/// Dilation of the block frame with the closed-form complement instead
/// of a randomized unitary completion.
inline DilationResult cc_dilation(int n) {
  DilationResult out;
  out.phi = cc_frame(n);
  out.psi = cc_complementary(n);
  out.m = 1;
  Mat stacked(n + 1, n + 1);
  stacked.topRows(n) = out.phi.vectors;
  stacked.bottomRows(1) = out.psi.vectors;
  out.h = Frame(std::move(stacked));
  Mat g = gram(out.h);
  g -= Mat::Identity(n + 1, n + 1);
  out.gram_residual = g.cwiseAbs().maxCoeff();
  return out;
}

/// Block data: dimension n and the n+1 strictly increasing weights.
struct CCBlock {
  int n = 0;
  RealVec weights;  // length n + 1
};

inline void validate(const CCBlock& block) {
  if (block.n < 1) throw std::invalid_argument("cc block: n must be at least 1");
  if (block.weights.size() != block.n + 1)
    throw std::invalid_argument("cc block: weights must have length n + 1");
  for (int i = 0; i + 1 < block.weights.size(); ++i)
    if (!(block.weights(i) < block.weights(i + 1)))
      throw std::invalid_argument("cc block: weights must be strictly increasing");
}

/// Roots of sum_i 1/(E_i - mu) = 0, one in each open bracket
/// (E_i, E_{i+1}).
struct SecularSolution {
  RealVec roots;  // ascending, length n - 1
  std::vector<std::pair<double, double>> brackets;
  RealVec residuals;  // |sum 1/(E_i - mu)| / sum 1/|E_i - mu| at each root
};

/// Bisection on the increasing function g(mu) = sum_i 1/(E_i - mu),
/// which runs from -inf to +inf inside each bracket, continued to the
/// floating-point fixpoint of the midpoint. Near-degenerate weights
/// (gap below 1e-10 of the span) are rejected.
inline SecularSolution secular_roots(const RealVec& e) {
  const int n = static_cast<int>(e.size());
  if (n < 2) throw std::invalid_argument("secular_roots: need at least two weights");
  const double span = e(n - 1) - e(0);
  for (int i = 0; i + 1 < n; ++i)
    if (!(e(i + 1) - e(i) > 1e-10 * span))
      throw std::invalid_argument("degenerate weights unsupported in secular solver");

  auto g = [&](double mu) {
    double acc = 0.0;
    for (int i = 0; i < n; ++i) acc += 1.0 / (e(i) - mu);
    return acc;
  };

  SecularSolution sol;
  sol.roots.resize(n - 1);
  sol.residuals.resize(n - 1);
  sol.brackets.reserve(static_cast<std::size_t>(n - 1));
  for (int i = 0; i + 1 < n; ++i) {
    double lo = e(i), hi = e(i + 1);
    for (int iter = 0; iter < 200; ++iter) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      const double val = g(mid);
      if (val == 0.0) {
        lo = hi = mid;
        break;
      }
      (val < 0.0 ? lo : hi) = mid;
    }
    const double root = 0.5 * (lo + hi);
    sol.roots(i) = root;
    sol.brackets.emplace_back(e(i), e(i + 1));
    double mag = 0.0;
    for (int k = 0; k < n; ++k) mag += 1.0 / std::abs(e(k) - root);
    sol.residuals(i) = std::abs(g(root)) / mag;
  }
  return sol;
}

/// Closed-form spectrum of the block Hamiltonian: the n - 1 secular
/// roots with eigenvectors f_j = sum_i e_i / (E_i - mu_j), plus the top
/// weight E_{n+1} with eigenvector phi_{n+1}. For n = 1 the spectrum is
/// just {E_2} with eigenvector e_1.
inline SpectrumReport cc_block_spectrum(const CCBlock& block) {
  validate(block);
  const int n = block.n;
  const Mat h = assemble(cc_frame(n), block.weights).h;

  SpectrumReport rep;
  rep.eigenvalues.resize(n);
  rep.eigenvectors.resize(n, n);
  rep.residuals.resize(n);

  if (n >= 2) {
    SecularSolution sec = secular_roots(block.weights.head(n));
    for (int j = 0; j < n - 1; ++j) {
      rep.eigenvalues(j) = sec.roots(j);
      Vec f(n);
      for (int i = 0; i < n; ++i)
        f(i) = Complex(1.0 / (block.weights(i) - sec.roots(j)), 0.0);
      rep.eigenvectors.col(j) = f / f.norm();
    }
  }
  rep.eigenvalues(n - 1) = block.weights(n);
  rep.eigenvectors.col(n - 1) =
      Vec::Constant(n, Complex(1.0 / std::sqrt(double(n)), 0.0));

  for (int j = 0; j < n; ++j)
    rep.residuals(j) =
        (h * rep.eigenvectors.col(j) - rep.eigenvalues(j) * rep.eigenvectors.col(j)).norm();
  return rep;
}

/// Truncated lowering operator a e_j = sqrt(j-1) e_{j-1}, a e_1 = 0.
inline RealMat ladder_a(int n) {
  if (n < 1) throw std::invalid_argument("ladder_a: n must be at least 1");
  RealMat a = RealMat::Zero(n, n);
  for (int k = 1; k < n; ++k) a(k - 1, k) = std::sqrt(double(k));
  return a;
}

inline RealMat ladder_a_star(int n) { return ladder_a(n).transpose(); }

/// The vector e~ appearing in the action of a_n on the block frame:
/// (1/n) sum over the first n-1 basis vectors weighted by sqrt(i). (The
/// a_n action maps e_n down, so no sqrt(n) e_n term can appear.)
inline RealVec ladder_shift_vector(int n) {
  if (n < 1) throw std::invalid_argument("ladder_shift_vector: n must be at least 1");
  RealVec v = RealVec::Zero(n);
  for (int i = 1; i < n; ++i) v(i - 1) = std::sqrt(double(i)) / n;
  return v;
}

/// Closed-form action of a_n on the block frame member with 1-based
/// index j in 1..n+1:
///   j = 1:          -e~
///   2 <= j <= n:    sqrt(j-1) phi_{j-1} + sqrt((j-1)/n) phi_{n+1} - e~
///   j = n + 1:      sqrt(n) e~
inline RealVec ladder_action_on_frame(int n, int j) {
  if (n < 1) throw std::invalid_argument("ladder_action_on_frame: n must be at least 1");
  if (j < 1 || j > n + 1)
    throw std::out_of_range("ladder_action_on_frame: index out of range");
  const RealVec shift = ladder_shift_vector(n);
  const RealMat phi = cc_frame(n).vectors.real();
  if (j == 1) return -shift;
  if (j == n + 1) return std::sqrt(double(n)) * shift;
  const double root = std::sqrt(double(j - 1));
  return root * phi.col(j - 2) + (root / std::sqrt(double(n))) * phi.col(n) - shift;
}

/// V_{n+1} : C^{n+1} -> C^n mapping e_j to phi_j; its rows are
/// orthonormal (V V^* = I_n) while V^* V is a rank-n projector.
inline RealMat vertical_v(int n) {
  if (n < 1) throw std::invalid_argument("vertical_v: n must be at least 1");
  return cc_frame(n).vectors.real();
}

/// Finite list of blocks whose concatenated weights must respect the
/// global strictly increasing order E_1^{(1)} < E_2^{(1)} < E_1^{(2)} < ...
struct CCFamily {
  std::vector<CCBlock> blocks;
};

inline void validate(const CCFamily& family) {
  if (family.blocks.empty()) throw std::invalid_argument("cc family: no blocks");
  double prev = -std::numeric_limits<double>::infinity();
  for (const CCBlock& block : family.blocks) {
    validate(block);
    for (int i = 0; i < block.weights.size(); ++i) {
      if (!(block.weights(i) > prev))
        throw std::domain_error("cc family: weights violate the global increasing order");
      prev = block.weights(i);
    }
  }
}

/// Union frame of the first `n_blocks` blocks, each embedded in its own
/// coordinate range, together with the concatenated weights.
struct CCDirectSum {
  Frame frame;
  Weights weights;
  std::vector<int> dim_offsets;  // coordinate offset per block
};

inline CCDirectSum direct_sum_frame(const CCFamily& family, int n_blocks = -1) {
  validate(family);
  const int used = n_blocks < 0 ? static_cast<int>(family.blocks.size())
                                : std::min<int>(n_blocks, family.blocks.size());
  if (used == 0) throw std::invalid_argument("cc family: no blocks");
  int total_dim = 0, total_j = 0;
  for (int b = 0; b < used; ++b) {
    total_dim += family.blocks[static_cast<std::size_t>(b)].n;
    total_j += family.blocks[static_cast<std::size_t>(b)].n + 1;
  }

  CCDirectSum out;
  Mat v = Mat::Zero(total_dim, total_j);
  out.weights.resize(total_j);
  int row = 0, col = 0;
  for (int b = 0; b < used; ++b) {
    const CCBlock& block = family.blocks[static_cast<std::size_t>(b)];
    out.dim_offsets.push_back(row);
    v.block(row, col, block.n, block.n + 1) = cc_frame(block.n).vectors;
    out.weights.segment(col, block.n + 1) = block.weights;
    row += block.n;
    col += block.n + 1;
  }
  out.frame = Frame(std::move(v));
  return out;
}

/// Block-diagonal Hamiltonian over the direct sum of the block spaces;
/// its spectrum is the multiset union of the block spectra.
inline FrameHamiltonian direct_sum_hamiltonian(const CCFamily& family, int n_blocks = -1) {
  CCDirectSum sum = direct_sum_frame(family, n_blocks);
  return assemble(sum.frame, sum.weights);
}

/// sup over blocks and interior indices j <= n of E_j^{(n)} / sqrt(n),
/// the quantity controlling boundedness of the complement operator B.
inline double b_bound_ratio(const CCFamily& family) {
  validate(family);
  double sup = 0.0;
  for (const CCBlock& block : family.blocks)
    for (int j = 0; j < block.n; ++j)
      sup = std::max(sup, std::abs(block.weights(j)) / std::sqrt(double(block.n)));
  return sup;
}

}  // namespace frameham::cc
