#include "zeit/inversion.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <memory>
#include <string>

namespace zeit {

const char* to_string(Method m) { return m == Method::svd ? "svd" : "triangular"; }

Method method_from_string(std::string_view s) {
  if (s == "svd") return Method::svd;
  if (s == "triangular") return Method::triangular;
  throw std::invalid_argument("unknown method: " + std::string(s));
}

BlockSVD::BlockSVD(const BlockDiagonalOperator& op) : M_(op.order()) {
  entries_.resize(M_);
#pragma omp parallel for schedule(dynamic)
  for (int l = 0; l < M_; ++l) {
    const TriangularBlock& blk = op.block(l);
    const int dim = blk.dim();
    Eigen::MatrixXd A(dim, dim);
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) A(r, c) = blk.at(r, c);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeFullU | Eigen::ComputeFullV);
    BlockSVDEntry e;
    e.dim = dim;
    e.values.assign(svd.singularValues().data(), svd.singularValues().data() + dim);
    e.U.resize(static_cast<std::size_t>(dim) * dim);
    e.V.resize(static_cast<std::size_t>(dim) * dim);
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) {
        e.U[static_cast<std::size_t>(r) * dim + c] = svd.matrixU()(r, c);
        e.V[static_cast<std::size_t>(r) * dim + c] = svd.matrixV()(r, c);
      }
    entries_[l] = std::move(e);
  }
}

OrderingMap::OrderingMap(int M, OrderingKind kind, std::vector<Entry> ranked)
    : M_(M), kind_(kind), ranked_(std::move(ranked)) {
  const int P = total();
  if (static_cast<int>(ranked_.size()) != P)
    throw std::invalid_argument("OrderingMap: expected M(M+1)/2 ranked entries");
  table_.assign(static_cast<std::size_t>(P) * M_, 0);
  std::vector<int> running(M_, 0);
  for (int p = 1; p <= P; ++p) {
    ++running[ranked_[p - 1].block];
    std::copy(running.begin(), running.end(), table_.begin() + static_cast<std::size_t>(p - 1) * M_);
  }
}

std::span<const int> OrderingMap::counts(int p) const {
  if (p < 1 || p > total()) throw std::invalid_argument("OrderingMap: p out of range");
  return {table_.data() + static_cast<std::size_t>(p - 1) * M_, static_cast<std::size_t>(M_)};
}

namespace {

OrderingMap rank_entries(int M, OrderingKind kind, std::vector<OrderingMap::Entry> entries) {
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    if (a.value != b.value) return a.value > b.value;
    if (a.block != b.block) return a.block < b.block;
    return a.pos < b.pos;
  });
  return OrderingMap(M, kind, std::move(entries));
}

}  // namespace

OrderingMap build_ordering(const BlockSVD& svd) {
  const int M = svd.order();
  std::vector<OrderingMap::Entry> entries;
  entries.reserve(M * (M + 1) / 2);
  for (int l = 0; l < M; ++l)
    for (int i = 0; i < svd.block(l).dim; ++i)
      entries.push_back({svd.block(l).values[i], l, i});
  return rank_entries(M, OrderingKind::singular, std::move(entries));
}

OrderingMap build_ordering(const BlockDiagonalOperator& op) {
  const int M = op.order();
  std::vector<OrderingMap::Entry> entries;
  entries.reserve(M * (M + 1) / 2);
  for (int l = 0; l < M; ++l)
    for (int i = 0; i < op.block(l).dim(); ++i)
      entries.push_back({std::abs(op.block(l).diag(i)), l, i});
  return rank_entries(M, OrderingKind::diagonal, std::move(entries));
}

OrderingMap build_ordering(int M, OrderingKind kind) {
  if (kind == OrderingKind::singular) return build_ordering(BlockSVD(M));
  return build_ordering(BlockDiagonalOperator(M));
}

std::vector<Complex> forward_substitution(int j, std::span<const Complex> a_vec, int q) {
  if (q < 0 || q > static_cast<int>(a_vec.size()))
    throw std::invalid_argument("forward_substitution: q exceeds data length");
  const int j_abs = std::abs(j);
  std::vector<Complex> c(q);
  for (int k = 0; k < q; ++k) {
    Complex value = -std::sqrt(kPi * (j_abs + 2 * k + 1)) * binomial(j_abs + 2 * k, k) * a_vec[k];
    for (int i = 1; i <= k; ++i) {
      const double w = std::sqrt(static_cast<double>(j_abs + 2 * k + 1) * (j_abs + 2 * i - 1)) /
                       (j_abs + k + i) * binomial(j_abs + 2 * k, k - i + 1);
      value -= c[i - 1] * w;
    }
    c[k] = value;
  }
  return c;
}

namespace {

// c^j = sum_{i < q} v_i (u_i^H a) / sigma_i for one block.
void apply_truncated_pinv(const BlockSVDEntry& e, std::span<const Complex> a, int q,
                          std::span<Complex> out) {
  std::fill(out.begin(), out.end(), Complex{0.0, 0.0});
  for (int i = 0; i < q; ++i) {
    Complex proj = 0.0;
    for (int r = 0; r < e.dim; ++r) proj += e.u(r, i) * a[r];
    proj /= e.values[i];
    for (int r = 0; r < e.dim; ++r) out[r] += e.v(r, i) * proj;
  }
}

// ||a - U_q U_q^H a||^2 for one block (Pythagoras on the left basis).
double projection_residual_sq(const BlockSVDEntry& e, std::span<const Complex> a, int q) {
  double total = 0.0;
  for (const Complex& v : a) total += std::norm(v);
  for (int i = 0; i < q; ++i) {
    Complex proj = 0.0;
    for (int r = 0; r < e.dim; ++r) proj += e.u(r, i) * a[r];
    total -= std::norm(proj);
  }
  return std::max(total, 0.0);
}

}  // namespace

RegularizedSolution truncated_svd_solve(const DiagonalData& data, int p, const BlockSVD& svd,
                                        const OrderingMap& tau) {
  const int M = data.order();
  if (svd.order() != M || tau.order() != M)
    throw std::invalid_argument("truncated_svd_solve: order mismatch");
  if (p < 1 || p > tau.total()) throw std::invalid_argument("truncated_svd_solve: p out of range");

  RegularizedSolution sol;
  sol.coeffs = ZernikeCoefficients(M);
  sol.p = p;
  sol.method = Method::svd;
  auto counts = tau.counts(p);

  // Per-block partials summed serially afterwards: keeps the residual
  // bitwise independent of the thread count.
  std::vector<double> res_parts(2 * M - 1, 0.0);
#pragma omp parallel for schedule(static)
  for (int j = -(M - 1); j <= M - 1; ++j) {
    const BlockSVDEntry& e = svd.block(std::abs(j));
    const int q = counts[std::abs(j)];
    apply_truncated_pinv(e, data.angular(j), q, sol.coeffs.angular(j));
    res_parts[j + M - 1] = projection_residual_sq(e, data.angular(j), q);
  }
  double res_sq = 0.0;
  for (double part : res_parts) res_sq += part;
  sol.residual = std::sqrt(res_sq);
  return sol;
}

RegularizedSolution truncated_svd_solve(const DiagonalData& data, int p) {
  BlockSVD svd(data.order());
  return truncated_svd_solve(data, p, svd, build_ordering(svd));
}

RegularizedSolution triangular_truncation_solve(const DiagonalData& data, int p,
                                                const OrderingMap& upsilon) {
  const int M = data.order();
  if (upsilon.order() != M)
    throw std::invalid_argument("triangular_truncation_solve: order mismatch");
  if (p < 1 || p > upsilon.total())
    throw std::invalid_argument("triangular_truncation_solve: p out of range");

  RegularizedSolution sol;
  sol.coeffs = ZernikeCoefficients(M);
  sol.p = p;
  sol.method = Method::triangular;
  auto counts = upsilon.counts(p);

  std::vector<double> res_parts(2 * M - 1, 0.0);
#pragma omp parallel for schedule(static)
  for (int j = -(M - 1); j <= M - 1; ++j) {
    auto a = data.angular(j);
    const int q = counts[std::abs(j)];
    std::vector<Complex> head = forward_substitution(j, a, q);
    auto out = sol.coeffs.angular(j);
    std::copy(head.begin(), head.end(), out.begin());
    // Exact inversion of the leading q x q system leaves only the tail.
    double tail = 0.0;
    for (int i = q; i < static_cast<int>(a.size()); ++i) tail += std::norm(a[i]);
    res_parts[j + M - 1] = tail;
  }
  double res_sq = 0.0;
  for (double part : res_parts) res_sq += part;
  sol.residual = std::sqrt(res_sq);
  return sol;
}

RegularizedSolution triangular_truncation_solve(const DiagonalData& data, int p) {
  return triangular_truncation_solve(data, p, build_ordering(BlockDiagonalOperator(data.order())));
}

RegularizedSolution morozov_select(const DiagonalData& data, double delta, double omega,
                                   Method method) {
  if (delta < 0.0) throw std::invalid_argument("morozov_select: delta must be >= 0");
  if (omega < 1.0) throw std::invalid_argument("morozov_select: omega must be >= 1");
  const int M = data.order();
  const int P = M * (M + 1) / 2;
  const double target_sq = omega * delta * omega * delta;

  std::unique_ptr<BlockSVD> svd;
  std::unique_ptr<OrderingMap> ordering;
  if (method == Method::svd) {
    svd = std::make_unique<BlockSVD>(M);
    ordering = std::make_unique<OrderingMap>(build_ordering(*svd));
  } else {
    ordering = std::make_unique<OrderingMap>(build_ordering(BlockDiagonalOperator(M)));
  }

  // Per-rank residual decrements: dropping the tail element / adding the
  // singular triple at ranked position p removes a fixed amount from
  // ||F c^p - a||^2, for +|j| and -|j| alike.
  double res_sq = 0.0;
  for (const Complex& v : data.flat()) res_sq += std::norm(v);

  int chosen = P;
  bool attained = false;
  for (int p = 1; p <= P; ++p) {
    const auto& entry = ordering->ranked(p);
    for (int sign : {+1, -1}) {
      if (entry.block == 0 && sign < 0) continue;
      const int j = sign * entry.block;
      auto a = data.angular(j);
      if (method == Method::svd) {
        const BlockSVDEntry& e = svd->block(entry.block);
        Complex proj = 0.0;
        for (int r = 0; r < e.dim; ++r) proj += e.u(r, entry.pos) * a[r];
        res_sq -= std::norm(proj);
      } else {
        res_sq -= std::norm(a[entry.pos]);
      }
    }
    res_sq = std::max(res_sq, 0.0);
    if (res_sq <= target_sq) {
      chosen = p;
      attained = true;
      break;
    }
  }

  RegularizedSolution sol = (method == Method::svd)
                                ? truncated_svd_solve(data, chosen, *svd, *ordering)
                                : triangular_truncation_solve(data, chosen, *ordering);
  sol.attained = attained;
  return sol;
}

}  // namespace zeit
