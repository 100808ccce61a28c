#pragma once

#include "zeit/common.hpp"
#include "zeit/zernike.hpp"

namespace zeit {

// Fourier-basis matrix element a^{j,k}_{m,n} of the linearized
// current-to-voltage map applied to psi_{j,k}. Nonzero only when
// n = m + j, k < min(|m|, |n|) and mn > 0; the value then is
//   -(1/sqrt(pi)) * sqrt(|j|+2k+1)/(min(|m|,|n|)+|j|+k)
//       * prod_{i=1}^{k} (min(|m|,|n|)-i)/(|j|+min(|m|,|n|)+k-i).
// Total function: every other index combination returns exactly 0.
double coefficient(int j, int k, int m, int n);

// Lower-triangular block coupling the Zernike coefficients of angular
// index |j| to the corresponding data diagonal, truncation order M.
// Diagonal entries are strictly negative with nonincreasing magnitudes.
struct TriangularBlock {
  int j_abs = 0;
  int M = 0;
  std::vector<double> entries;  // row-major, dim x dim

  int dim() const { return M - j_abs; }
  double at(int row, int col) const { return entries[static_cast<std::size_t>(row) * dim() + col]; }
  double diag(int i) const { return at(i, i); }
};

TriangularBlock triangular_block(int j_abs, int M);

// The order-M block-diagonal operator: logical blocks for j = -(M-1)..M-1,
// each equal to the shared F^{|j|,M}. Never materialized densely here.
class BlockDiagonalOperator {
 public:
  explicit BlockDiagonalOperator(int M);

  int order() const { return M_; }
  int dimension() const { return M_ * M_; }
  int block_count() const { return 2 * M_ - 1; }
  const TriangularBlock& block(int j_abs) const { return blocks_[j_abs]; }

 private:
  int M_;
  std::vector<TriangularBlock> blocks_;  // indexed by j_abs, stored once
};

BlockDiagonalOperator assemble_full(int M);

// (2M) x (2M) complex measurement matrix over m, n in {-M..-1, 1..M},
// row/column order fixed as (-M, ..., -1, 1, ..., M).
struct DataMatrix {
  int M = 0;
  std::vector<Complex> entries;  // row-major

  DataMatrix() = default;
  explicit DataMatrix(int M_) : M(M_), entries(static_cast<std::size_t>(2 * M_) * (2 * M_)) {}

  // Position of index m in (-M..-1, 1..M); m must be nonzero with |m| <= M.
  int index_of(int m) const {
    if (m == 0 || std::abs(m) > M) throw std::invalid_argument("DataMatrix: index out of range");
    return m < 0 ? m + M : M + m - 1;
  }
  Complex& at(int m, int n) { return entries[static_cast<std::size_t>(index_of(m)) * (2 * M) + index_of(n)]; }
  const Complex& at(int m, int n) const {
    return entries[static_cast<std::size_t>(index_of(m)) * (2 * M) + index_of(n)];
  }

  double frobenius_norm() const;

  friend bool operator==(const DataMatrix&, const DataMatrix&) = default;
};

// Per-angular-index data vectors a^{j,M} (length M - |j| each).
class DiagonalData : public AngularVector {
 public:
  DiagonalData() = default;
  explicit DiagonalData(int M) : AngularVector(M) {}
};

// a^{j,M} = F^{|j|,M} c^{j,M} for every j, evaluated blockwise.
DiagonalData apply_forward(const ZernikeCoefficients& coeffs);
DiagonalData apply_forward(const BlockDiagonalOperator& op, const ZernikeCoefficients& coeffs);

// Embeds the per-diagonal vectors into the full matrix: positions
// (m, m+j) / (-m, -m+j), the midpoint-mirrored copies, zeros on the
// sign-mixed quadrants.
DataMatrix diagonal_data_to_matrix(const DiagonalData& diag);

// Reads the per-diagonal vectors back out. With averaging, each entry is
// the mean of the primary readout and its midpoint-mirrored twin; this is
// the default when a full matrix is available since it damps noise.
DiagonalData extract_diagonals(const DataMatrix& data, bool averaging = true);

// l2 distance ||F c - a||_2 over the concatenated per-diagonal vectors.
double residual_norm(const DiagonalData& data, const ZernikeCoefficients& coeffs);

}  // namespace zeit
