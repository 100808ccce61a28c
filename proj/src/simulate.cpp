#include "zeit/simulate.hpp"

#include <algorithm>

#include "zeit/dft.hpp"

namespace zeit {

void DiskInclusion::validate() const {
  if (!(radius > 0.0)) throw std::invalid_argument("inclusion radius must be > 0");
  if (!(kappa > -1.0)) throw std::invalid_argument("inclusion contrast must satisfy kappa > -1");
  if (!(std::abs(center) + radius < 1.0))
    throw std::invalid_argument("inclusion must be compactly contained in the unit disk");
}

double GaussianSampler::next() {
  // (x + 0.5) / 2^64 maps the integer draw into (0, 1).
  const double u1 =
      (static_cast<double>(engine_()) + 0.5) * (1.0 / 18446744073709551616.0);
  const double u2 =
      (static_cast<double>(engine_()) + 0.5) * (1.0 / 18446744073709551616.0);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

double concentric_difference_eigenvalue(double kappa, double rho, int m) {
  if (!(rho > 0.0 && rho < 1.0))
    throw std::invalid_argument("concentric_difference_eigenvalue: rho outside (0,1)");
  if (!(kappa > -1.0))
    throw std::invalid_argument("concentric_difference_eigenvalue: kappa must be > -1");
  if (m == 0) throw std::invalid_argument("concentric_difference_eigenvalue: m must be nonzero");
  const int m_abs = std::abs(m);
  const double mu = kappa / (kappa + 2.0);
  const double r2m = std::pow(rho, 2 * m_abs);
  return -2.0 * mu * r2m / (m_abs * (1.0 + mu * r2m));
}

std::pair<MobiusMap, double> mobius_for_disk(const DiskInclusion& inclusion) {
  inclusion.validate();
  const double x0 = std::abs(inclusion.center);
  if (x0 < 1e-15) return {MobiusMap{}, inclusion.radius};

  const double alpha = std::arg(inclusion.center);
  const double r = inclusion.radius;
  // After rotating the center onto the positive real axis, the real map
  // parameter solves x0 a^2 - (1 + x0^2 - r^2) a + x0 = 0; the two roots
  // are reciprocal, take the one inside the disk. It sends the diametral
  // points x0 -+ r to -+ rho.
  const double b = 1.0 + x0 * x0 - r * r;
  const double disc = std::sqrt(b * b - 4.0 * x0 * x0);
  const double a = 2.0 * x0 / (b + disc);
  const double rho = (x0 + r - a) / (1.0 - a * (x0 + r));

  MobiusMap map;
  map.a = std::polar(a, alpha);
  map.phase = -alpha;
  return {map, rho};
}

BoundarySamples simulate_boundary_potentials(const DiskInclusion& inclusion, int M, int N) {
  inclusion.validate();
  if (M < 1) throw std::invalid_argument("simulate_boundary_potentials: M must be >= 1");
  if (N < 4 * M)
    throw std::invalid_argument("simulate_boundary_potentials: need N >= 4M quadrature headroom");

  const auto [map, rho] = mobius_for_disk(inclusion);
  const int L = 2 * N + 1;
  const double inv_sqrt_2pi = 1.0 / std::sqrt(2.0 * kPi);

  // Node-independent geometry, shared across all currents:
  //   beta_l  = angle of Phi at the concentric node (current transport),
  //   w_l     = |Phi'| there (current Jacobian),
  //   alpha_l = angle of Psi at the physical node (potential pullback).
  std::vector<double> beta(L), weight(L), alpha(L);
  for (int l = 0; l < L; ++l) {
    const double theta = 2.0 * kPi * l / L;
    const Complex node = std::polar(1.0, theta);
    beta[l] = std::arg(map.inverse(node));
    weight[l] = map.inverse_deriv_abs(node);
    alpha[l] = std::arg(map.forward(node));
  }

  std::vector<double> lambda(N + 1, 0.0);  // lambda[|n|], n = 0 unused
  for (int n = 1; n <= N; ++n)
    lambda[n] = inclusion.kappa == 0.0
                    ? 0.0
                    : concentric_difference_eigenvalue(inclusion.kappa, rho, n);

  const Dft dft(L);
  BoundarySamples out(M, N);

#pragma omp parallel
  {
    std::vector<Complex> current(L), spectrum(L);
#pragma omp for schedule(static)
    for (int row = 0; row < 2 * M; ++row) {
      const int m = row < M ? row - M : row - M + 1;

      // (1)-(2): transported current (f_m o Phi) |Phi'| at the concentric
      // nodes, expanded over Fourier modes by FFT.
      for (int l = 0; l < L; ++l)
        current[l] = weight[l] * inv_sqrt_2pi * std::polar(1.0, m * beta[l]);
      dft.forward(current.data(), spectrum.data());

      // (3)-(4): scale mode n by lambda_n and synthesize the potential at
      // the pulled-back angles; mode n = 0 carries no potential.
      auto g = out.row(m);
      for (int l = 0; l < L; ++l) {
        const Complex rot = std::polar(1.0, alpha[l]);
        Complex power = std::polar(1.0, -N * alpha[l]);  // e^{i n alpha}, n = -N
        Complex acc = 0.0;
        for (int n = -N; n <= N; ++n) {
          if (n != 0) {
            const Complex coef = spectrum[(n + L) % L];
            acc += lambda[std::abs(n)] * coef * power;
          }
          power *= rot;
        }
        g[l] = acc / static_cast<double>(L);
      }

      // (5): ground-level normalization, zero mean over the nodes.
      Complex mean = 0.0;
      for (const Complex& v : g) mean += v;
      mean /= static_cast<double>(L);
      for (Complex& v : g) v -= mean;
    }
  }

  for (const Complex& v : out.samples)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw NumericalContractError("simulate_boundary_potentials: non-finite sample");
  return out;
}

DataMatrix data_matrix_from_potentials(const BoundarySamples& samples) {
  const int M = samples.M;
  const int L = samples.nodes();
  const Dft dft(L);
  DataMatrix out(M);
  const double scale = std::sqrt(2.0 * kPi) / L;

#pragma omp parallel
  {
    std::vector<Complex> spectrum(L);
#pragma omp for schedule(static)
    for (int row = 0; row < 2 * M; ++row) {
      const int m = row < M ? row - M : row - M + 1;
      dft.forward(samples.row(m).data(), spectrum.data());
      // <g_m, f_n> by the periodic trapezoidal rule: the n-th DFT bin
      // scaled by sqrt(2 pi) / (2N+1). Requires |n| <= N, guaranteed by
      // the N >= 4M precondition upstream.
      for (int n = -M; n <= M; ++n) {
        if (n == 0) continue;
        out.at(m, n) = scale * spectrum[(n + L) % L];
      }
    }
  }
  return out;
}

std::pair<DataMatrix, double> add_noise(const DataMatrix& data, const NoiseSpec& spec) {
  if (spec.sigma < 0.0) throw std::invalid_argument("add_noise: sigma must be >= 0");
  if (spec.sigma == 0.0) return {data, 0.0};
  DataMatrix noisy = data;
  GaussianSampler gauss(spec.seed);
  // Row-major entry order, real then imaginary: the draw sequence is part
  // of the reproducibility contract.
  for (Complex& v : noisy.entries) {
    const double g_re = gauss.next();
    const double g_im = gauss.next();
    v = Complex(v.real() + spec.sigma * std::abs(v.real()) * g_re,
                v.imag() + spec.sigma * std::abs(v.imag()) * g_im);
  }
  const double delta = spec.sigma * data.frobenius_norm();
  return {std::move(noisy), delta};
}

}  // namespace zeit
