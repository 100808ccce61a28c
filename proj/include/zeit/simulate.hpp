#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "zeit/forward.hpp"

namespace zeit {

// Disk-shaped conductivity perturbation: value kappa inside the disk,
// zero outside (background conductivity 1). Must sit compactly inside
// the unit disk.
struct DiskInclusion {
  Complex center{0.0, 0.0};
  double radius = 0.0;
  double kappa = 0.0;  // inclusion conductivity = 1 + kappa

  void validate() const;
};

// Disk automorphism z -> e^{i phase} (z - a) / (1 - conj(a) z), |a| < 1.
struct MobiusMap {
  Complex a{0.0, 0.0};
  double phase = 0.0;

  Complex forward(Complex z) const {
    return std::polar(1.0, phase) * (z - a) / (1.0 - std::conj(a) * z);
  }
  Complex inverse(Complex w) const {
    const Complex wr = std::polar(1.0, -phase) * w;
    return (wr + a) / (1.0 + std::conj(a) * wr);
  }
  // |Psi'(z)| and |Phi'(w)|; exact on the closed disk.
  double forward_deriv_abs(Complex z) const {
    return (1.0 - std::norm(a)) / std::norm(1.0 - std::conj(a) * z);
  }
  double inverse_deriv_abs(Complex w) const {
    const Complex wr = std::polar(1.0, -phase) * w;
    return (1.0 - std::norm(a)) / std::norm(1.0 + std::conj(a) * wr);
  }
};

// Relative boundary potentials sampled on the equidistant grid
// theta_l = 2 pi l / (2N+1): one row of 2N+1 values per Fourier current
// index m in {-M..-1, 1..M}, row order (-M, ..., -1, 1, ..., M).
struct BoundarySamples {
  int M = 0;
  int N = 0;
  std::vector<Complex> samples;

  BoundarySamples() = default;
  BoundarySamples(int M_, int N_)
      : M(M_), N(N_), samples(static_cast<std::size_t>(2 * M_) * (2 * N_ + 1)) {}

  int nodes() const { return 2 * N + 1; }
  int row_of(int m) const {
    if (m == 0 || std::abs(m) > M) throw std::invalid_argument("BoundarySamples: bad index");
    return m < 0 ? m + M : M + m - 1;
  }
  std::span<Complex> row(int m) {
    return {samples.data() + static_cast<std::size_t>(row_of(m)) * nodes(),
            static_cast<std::size_t>(nodes())};
  }
  std::span<const Complex> row(int m) const {
    return {samples.data() + static_cast<std::size_t>(row_of(m)) * nodes(),
            static_cast<std::size_t>(nodes())};
  }

  friend bool operator==(const BoundarySamples&, const BoundarySamples&) = default;
};

struct NoiseSpec {
  double sigma = 0.0;  // relative noise level in [0, 1]
  std::uint64_t seed = 0;
};

// Deterministic standard-normal stream: Box-Muller (cosine branch) driven
// by mt19937_64, one value per two 64-bit draws. The exact construction is
// part of the file-format contract, see README.
class GaussianSampler {
 public:
  explicit GaussianSampler(std::uint64_t seed) : engine_(seed) {}
  double next();

 private:
  std::mt19937_64 engine_;
};

// Eigenvalue of the relative current-to-voltage operator of a concentric
// disk perturbation kappa * chi_{|z| < rho} for the Fourier current f_m:
//   lambda_m = -2 mu rho^{2|m|} / (|m| (1 + mu rho^{2|m|})),  mu = kappa/(kappa+2).
double concentric_difference_eigenvalue(double kappa, double rho, int m);

// Disk automorphism mapping the inclusion onto a concentric disk, plus the
// resulting concentric radius. The map parameter lies on the ray through
// the inclusion center; center 0 yields the identity.
std::pair<MobiusMap, double> mobius_for_disk(const DiskInclusion& inclusion);

// Relative boundary potentials g_m for all Fourier currents f_m, m in
// Z'_M, sampled at 2N+1 equidistant boundary nodes. Transport the current
// to the concentric frame, expand by FFT, scale modes by the concentric
// eigenvalues, synthesize at the pulled-back node angles, subtract the
// node mean. Requires N >= 4M.
BoundarySamples simulate_boundary_potentials(const DiskInclusion& inclusion, int M, int N);

// a_{m,n} = <g_m, f_n> by the periodic trapezoidal rule, computed as one
// FFT per row.
DataMatrix data_matrix_from_potentials(const BoundarySamples& samples);

// Adds zero-mean Gaussian noise with per-entry variances
// sigma^2 (Re a)^2 and sigma^2 (Im a)^2, row-major entry order, real part
// first. Returns the noisy matrix and the noise magnitude
// delta = sigma * ||A||_F computed from the clean matrix.
std::pair<DataMatrix, double> add_noise(const DataMatrix& data, const NoiseSpec& spec);

}  // namespace zeit
