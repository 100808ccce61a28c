#pragma once

#include "zeit/forward.hpp"

namespace zeit {

enum class Method { svd, triangular };
enum class OrderingKind { singular, diagonal };

const char* to_string(Method m);
Method method_from_string(std::string_view s);

// SVDs of the blocks F^{l,M}, l = 0..M-1, computed by one-sided Jacobi
// in extended precision. The blocks are invertible lower triangular with
// columns graded over many orders of magnitude (sigma_min(F^{0,M}) drops
// from ~5e-3 at M=4 to ~5e-12 at M=16); one-sided Jacobi preserves the
// relative accuracy of the small singular values where a bidiagonalizing
// solver only delivers absolute eps*sigma_max, and the factors are kept in
// long double so truncated pseudoinverses can be applied without the
// rounding of U leaking large data components into the small-sigma
// directions.
struct BlockSVDEntry {
  int dim = 0;
  std::vector<long double> values;  // nonincreasing, strictly positive
  std::vector<long double> U;       // row-major dim x dim, columns = left vectors
  std::vector<long double> V;       // row-major dim x dim, columns = right vectors

  long double u(int row, int col) const { return U[static_cast<std::size_t>(row) * dim + col]; }
  long double v(int row, int col) const { return V[static_cast<std::size_t>(row) * dim + col]; }
};

class BlockSVD {
 public:
  explicit BlockSVD(const BlockDiagonalOperator& op);
  explicit BlockSVD(int M) : BlockSVD(BlockDiagonalOperator(M)) {}

  int order() const { return M_; }
  const BlockSVDEntry& block(int l) const { return entries_[l]; }

 private:
  int M_;
  std::vector<BlockSVDEntry> entries_;
};

// Ranking of the M(M+1)/2 per-block values (singular values or diagonal
// magnitudes, one copy per block) in nonincreasing order. counts(p)[l]
// says how many of the top p values belong to block l. Ties break
// deterministically: larger value first, then lower block, then lower
// within-block position.
class OrderingMap {
 public:
  struct Entry {
    double value;
    int block;  // l = |j|
    int pos;    // 0-based within-block position
  };

  OrderingMap(int M, OrderingKind kind, std::vector<Entry> ranked);

  int order() const { return M_; }
  OrderingKind kind() const { return kind_; }
  int total() const { return M_ * (M_ + 1) / 2; }

  // Per-block counts for truncation index p in [1, total()].
  std::span<const int> counts(int p) const;
  // The p-th largest value (1-based), with its provenance.
  const Entry& ranked(int p) const { return ranked_[p - 1]; }

 private:
  int M_;
  OrderingKind kind_;
  std::vector<Entry> ranked_;
  std::vector<int> table_;  // total() x M cumulative counts
};

OrderingMap build_ordering(int M, OrderingKind kind);
OrderingMap build_ordering(const BlockSVD& svd);                 // singular values
OrderingMap build_ordering(const BlockDiagonalOperator& op);     // diagonal magnitudes

// Runs the explicit forward-substitution recursion for angular index j on
// the first q entries of a^{j,M}, returning c^j_1..c^j_q. Equivalent to
// applying the inverse of the leading q x q triangular block.
std::vector<Complex> forward_substitution(int j, std::span<const Complex> a_vec, int q);

struct RegularizedSolution {
  ZernikeCoefficients coeffs;
  int p = 0;
  double residual = 0.0;
  Method method = Method::svd;
  bool attained = true;  // false when a discrepancy target was not reached
};

// Truncated-SVD solution at truncation index p: block |j| keeps the
// top tau_{|j|}(p) singular triples; +j and -j always share the cut.
RegularizedSolution truncated_svd_solve(const DiagonalData& data, int p);
RegularizedSolution truncated_svd_solve(const DiagonalData& data, int p, const BlockSVD& svd,
                                        const OrderingMap& tau);

// Truncated-triangular solution at index p: block |j| runs the recursion
// for upsilon_{|j|}(p) steps and zero-pads the rest.
RegularizedSolution triangular_truncation_solve(const DiagonalData& data, int p);
RegularizedSolution triangular_truncation_solve(const DiagonalData& data, int p,
                                                const OrderingMap& upsilon);

// Smallest p whose residual falls below omega * delta. When no p reaches
// the target, returns the full-index solution flagged attained = false.
RegularizedSolution morozov_select(const DiagonalData& data, double delta, double omega,
                                   Method method);

}  // namespace zeit
