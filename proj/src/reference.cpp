#include "zeit/reference.hpp"

namespace zeit::ref {

std::vector<Complex> eval_expansion_naive(const ZernikeCoefficients& coeffs,
                                          std::span<const std::pair<double, double>> points) {
  const int M = coeffs.order();
  std::vector<Complex> out(points.size(), Complex{0.0, 0.0});
  for (std::size_t p = 0; p < points.size(); ++p) {
    const auto [r, theta] = points[p];
    Complex acc = 0.0;
    for (int j = -(M - 1); j <= M - 1; ++j)
      for (int k = 0; k < coeffs.size(j); ++k)
        acc += coeffs.at(j, k) * zernike_eval({j, k}, r, theta);
    out[p] = acc;
  }
  return out;
}

std::vector<Complex> dft_direct(std::span<const Complex> in) {
  const int L = static_cast<int>(in.size());
  std::vector<Complex> out(L);
  for (int n = 0; n < L; ++n) {
    Complex acc = 0.0;
    for (int l = 0; l < L; ++l)
      acc += in[l] * std::polar(1.0, -2.0 * kPi * n * l / L);
    out[n] = acc;
  }
  return out;
}

DataMatrix data_matrix_direct(const BoundarySamples& samples) {
  const int M = samples.M;
  const int L = samples.nodes();
  DataMatrix out(M);
  for (int m = -M; m <= M; ++m) {
    if (m == 0) continue;
    auto g = samples.row(m);
    for (int n = -M; n <= M; ++n) {
      if (n == 0) continue;
      Complex acc = 0.0;
      for (int l = 0; l < L; ++l) {
        const double theta = 2.0 * kPi * l / L;
        const Complex f_n = std::polar(1.0, n * theta) / std::sqrt(2.0 * kPi);
        acc += g[l] * std::conj(f_n);
      }
      out.at(m, n) = acc * (2.0 * kPi / L);
    }
  }
  return out;
}

BoundarySamples simulate_boundary_potentials_direct(const DiskInclusion& inclusion, int M, int N) {
  inclusion.validate();
  if (N < 4 * M) throw std::invalid_argument("need N >= 4M");
  const auto [map, rho] = mobius_for_disk(inclusion);
  const int L = 2 * N + 1;
  BoundarySamples out(M, N);

  for (int m = -M; m <= M; ++m) {
    if (m == 0) continue;
    // Transported current at the concentric nodes.
    std::vector<Complex> current(L);
    for (int l = 0; l < L; ++l) {
      const Complex node = std::polar(1.0, 2.0 * kPi * l / L);
      const Complex pre = map.inverse(node);
      current[l] = std::polar(1.0, m * std::arg(pre)) / std::sqrt(2.0 * kPi) *
                   map.inverse_deriv_abs(node);
    }
    const std::vector<Complex> spectrum = dft_direct(current);

    auto g = out.row(m);
    for (int l = 0; l < L; ++l) {
      const Complex node = std::polar(1.0, 2.0 * kPi * l / L);
      const double alpha = std::arg(map.forward(node));
      Complex acc = 0.0;
      for (int n = -N; n <= N; ++n) {
        if (n == 0) continue;
        const double lambda =
            inclusion.kappa == 0.0 ? 0.0
                                   : concentric_difference_eigenvalue(inclusion.kappa, rho, n);
        acc += lambda * spectrum[(n + L) % L] * std::polar(1.0, n * alpha);
      }
      g[l] = acc / static_cast<double>(L);
    }
    Complex mean = 0.0;
    for (const Complex& v : g) mean += v;
    mean /= static_cast<double>(L);
    for (Complex& v : g) v -= mean;
  }
  return out;
}

std::vector<double> dense_operator(int M) {
  const BlockDiagonalOperator op(M);
  const int dim = M * M;
  std::vector<double> dense(static_cast<std::size_t>(dim) * dim, 0.0);
  int offset = 0;
  for (int j = -(M - 1); j <= M - 1; ++j) {
    const TriangularBlock& blk = op.block(std::abs(j));
    for (int r = 0; r < blk.dim(); ++r)
      for (int c = 0; c < blk.dim(); ++c)
        dense[static_cast<std::size_t>(offset + r) * dim + (offset + c)] = blk.at(r, c);
    offset += blk.dim();
  }
  return dense;
}

std::vector<Complex> apply_dense(const std::vector<double>& dense, std::span<const Complex> x) {
  const std::size_t dim = x.size();
  std::vector<Complex> y(dim, Complex{0.0, 0.0});
  for (std::size_t r = 0; r < dim; ++r) {
    Complex acc = 0.0;
    for (std::size_t c = 0; c < dim; ++c) acc += dense[r * dim + c] * x[c];
    y[r] = acc;
  }
  return y;
}

}  // namespace zeit::ref
