#include "zeit/forward.hpp"

namespace zeit {

double coefficient(int j, int k, int m, int n) {
  if (k < 0 || m == 0 || n == 0) return 0.0;
  if (n != m + j) return 0.0;
  if (static_cast<long long>(m) * n <= 0) return 0.0;
  const int mn_min = std::min(std::abs(m), std::abs(n));
  if (k >= mn_min) return 0.0;

  const int j_abs = std::abs(j);
  // Running product of ratios keeps every partial in (0, 1].
  double prod = 1.0;
  for (int i = 1; i <= k; ++i)
    prod *= static_cast<double>(mn_min - i) / (j_abs + mn_min + k - i);
  return -std::sqrt(j_abs + 2 * k + 1) / (std::sqrt(kPi) * (mn_min + j_abs + k)) * prod;
}

TriangularBlock triangular_block(int j_abs, int M) {
  if (j_abs < 0 || M < 1 || j_abs >= M)
    throw std::invalid_argument("triangular_block: requires 0 <= j_abs <= M-1");
  TriangularBlock blk{j_abs, M, {}};
  const int dim = blk.dim();
  blk.entries.assign(static_cast<std::size_t>(dim) * dim, 0.0);
  for (int m = 1; m <= dim; ++m)
    for (int k = 1; k <= m; ++k)
      blk.entries[static_cast<std::size_t>(m - 1) * dim + (k - 1)] =
          coefficient(j_abs, k - 1, m, m + j_abs);
  return blk;
}

BlockDiagonalOperator::BlockDiagonalOperator(int M) : M_(M) {
  if (M < 1) throw std::invalid_argument("BlockDiagonalOperator: M must be >= 1");
  blocks_.reserve(M);
  for (int l = 0; l < M; ++l) blocks_.push_back(triangular_block(l, M));
}

BlockDiagonalOperator assemble_full(int M) { return BlockDiagonalOperator(M); }

double DataMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const Complex& v : entries) s += std::norm(v);
  return std::sqrt(s);
}

DiagonalData apply_forward(const BlockDiagonalOperator& op, const ZernikeCoefficients& coeffs) {
  const int M = coeffs.order();
  if (op.order() != M) throw std::invalid_argument("apply_forward: operator/coefficient order mismatch");
  DiagonalData out(M);
  // Extended accumulators: the blocks are graded over many orders of
  // magnitude and downstream inversion amplifies any rounding here by the
  // block condition number.
#pragma omp parallel for schedule(static)
  for (int j = -(M - 1); j <= M - 1; ++j) {
    const TriangularBlock& blk = op.block(std::abs(j));
    auto c = coeffs.angular(j);
    auto a = out.angular(j);
    const int dim = blk.dim();
    for (int row = 0; row < dim; ++row) {
      long double re = 0.0L, im = 0.0L;
      for (int col = 0; col <= row; ++col) {
        const long double f = blk.at(row, col);
        re += f * c[col].real();
        im += f * c[col].imag();
      }
      a[row] = Complex(static_cast<double>(re), static_cast<double>(im));
    }
  }
  return out;
}

DiagonalData apply_forward(const ZernikeCoefficients& coeffs) {
  return apply_forward(BlockDiagonalOperator(coeffs.order()), coeffs);
}

DataMatrix diagonal_data_to_matrix(const DiagonalData& diag) {
  const int M = diag.order();
  DataMatrix out(M);
  for (int j = -(M - 1); j <= M - 1; ++j) {
    auto v = diag.angular(j);
    for (int i = 0; i < diag.size(j); ++i) {
      const int m = i + 1;
      if (j >= 0) {
        out.at(m, m + j) = v[i];
        out.at(-m - j, -m) = v[i];  // midpoint mirror
      } else {
        out.at(-m, -m + j) = v[i];
        out.at(m - j, m) = v[i];
      }
    }
  }
  return out;
}

DiagonalData extract_diagonals(const DataMatrix& data, bool averaging) {
  const int M = data.M;
  DiagonalData out(M);
  for (int j = -(M - 1); j <= M - 1; ++j) {
    auto v = out.angular(j);
    for (int i = 0; i < out.size(j); ++i) {
      const int m = i + 1;
      Complex primary, mirror;
      if (j >= 0) {
        primary = data.at(m, m + j);
        mirror = data.at(-m - j, -m);
      } else {
        primary = data.at(-m, -m + j);
        mirror = data.at(m - j, m);
      }
      v[i] = averaging ? 0.5 * (primary + mirror) : primary;
    }
  }
  return out;
}

double residual_norm(const DiagonalData& data, const ZernikeCoefficients& coeffs) {
  if (data.order() != coeffs.order())
    throw std::invalid_argument("residual_norm: order mismatch");
  DiagonalData predicted = apply_forward(coeffs);
  long double s = 0.0L;
  auto a = data.flat();
  auto b = predicted.flat();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const long double dre = static_cast<long double>(b[i].real()) - a[i].real();
    const long double dim = static_cast<long double>(b[i].imag()) - a[i].imag();
    s += dre * dre + dim * dim;
  }
  return static_cast<double>(sqrtl(s));
}

}  // namespace zeit
