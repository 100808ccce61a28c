#pragma once

#include <cmath>
#include <complex>
#include <cstdlib>
#include <span>
#include <stdexcept>
#include <vector>

namespace zeit {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// Thrown when a pipeline output violates an internal numeric guarantee
// (non-finite values, failed consistency gate). Distinct from
// std::invalid_argument, which covers bad user input.
class NumericalContractError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Per-angular-index complex vectors: one vector of length M - |j| for each
// j in {-(M-1), ..., M-1}, M^2 entries total. Shared layout of Zernike
// coefficient sets and of the per-diagonal data vectors.
class AngularVector {
 public:
  AngularVector() = default;
  explicit AngularVector(int M) : M_(M) {
    if (M < 1) throw std::invalid_argument("truncation order M must be >= 1");
    offsets_.resize(2 * M, 0);
    for (int b = 0; b < 2 * M - 1; ++b)
      offsets_[b + 1] = offsets_[b] + (M - std::abs(b - (M - 1)));
    values_.assign(static_cast<std::size_t>(M) * M, Complex{0.0, 0.0});
  }

  int order() const { return M_; }
  int size(int j) const { return M_ - std::abs(j); }
  int total() const { return M_ * M_; }

  Complex& at(int j, int k) { return values_[check_index(j, k)]; }
  const Complex& at(int j, int k) const { return values_[check_index(j, k)]; }

  // Entries for one angular index, radial index ascending.
  std::span<Complex> angular(int j) {
    return {values_.data() + offset(j), static_cast<std::size_t>(size(j))};
  }
  std::span<const Complex> angular(int j) const {
    return {values_.data() + offset(j), static_cast<std::size_t>(size(j))};
  }

  // All entries, blocks ordered j = -(M-1), ..., M-1.
  std::span<Complex> flat() { return values_; }
  std::span<const Complex> flat() const { return values_; }

  // Max |x_{-j,k} - conj(x_{j,k})| over all stored entries.
  double conjugate_asymmetry() const;
  bool conjugate_symmetric(double tol) const { return conjugate_asymmetry() <= tol; }
  // Enforce x_{-j,k} = conj(x_{j,k}) by averaging the two.
  void symmetrize();

  double norm2() const;

  friend bool operator==(const AngularVector&, const AngularVector&) = default;

 private:
  int offset(int j) const { return offsets_[j + M_ - 1]; }
  std::size_t check_index(int j, int k) const {
    if (std::abs(j) > M_ - 1 || k < 0 || k >= size(j))
      throw std::invalid_argument("angular/radial index out of range");
    return static_cast<std::size_t>(offset(j) + k);
  }

  int M_ = 0;
  std::vector<int> offsets_;
  std::vector<Complex> values_;
};

}  // namespace zeit
