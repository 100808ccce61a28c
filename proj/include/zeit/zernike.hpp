#pragma once

#include <cstdint>
#include <utility>

#include "zeit/common.hpp"

namespace zeit {

// Largest n for which C(n, k) is kept in the exact 64-bit integer table.
// The radial polynomial caps its degree |j| + 2k here: the alternating sum
// loses accuracy for higher degrees anyway (roughly one digit per ~8 degrees
// past 60), and degree 64 covers truncation order M = 32 with margin.
inline constexpr int kMaxRadialDegree = 64;

struct ZernikeIndex {
  int j = 0;  // angular index, any sign
  int k = 0;  // radial index, >= 0

  friend bool operator==(const ZernikeIndex&, const ZernikeIndex&) = default;
};

// C(n, k). Exact table lookup for 0 <= n <= kMaxRadialDegree, running
// product in double beyond that (accurate to ~1e-15 for n <= 200).
double binomial(int n, int k);

// Exact integer C(n, k); throws for n > kMaxRadialDegree. C(64, 32) is the
// largest table entry and needs 61 bits, so every value here is exact
// (a plain double would already round above n = 56).
std::uint64_t binomial_exact(int n, int k);

// Zernike radial polynomial R^{|j|}_{|j|+2k}(r) on [0, 1], evaluated as the
// explicit alternating binomial sum. Throws std::invalid_argument for r
// outside [0, 1] or degree |j| + 2k beyond kMaxRadialDegree.
double radial_poly(int j_abs, int k, double r);

// Orthonormal Zernike polynomial psi_{j,k}(r, theta) on the unit disk:
// sqrt((|j|+2k+1)/pi) * R^{|j|}_{|j|+2k}(r) * exp(i j theta).
Complex zernike_eval(ZernikeIndex idx, double r, double theta);

// Truncated Zernike coefficient set of order M: c_{j,k} for
// j in {-(M-1),...,M-1}, k in {0,...,M-|j|-1}.
class ZernikeCoefficients : public AngularVector {
 public:
  ZernikeCoefficients() = default;
  explicit ZernikeCoefficients(int M) : AngularVector(M) {}
};

// Pointwise expansion sum_{j,k} c_{j,k} psi_{j,k}(r, theta). Points are
// (r, theta) pairs with r in [0, 1]. Groups work by |j| so each radial value
// is computed once and shared between +j and -j; parallel over points.
std::vector<Complex> eval_expansion(const ZernikeCoefficients& coeffs,
                                    std::span<const std::pair<double, double>> points);

// Precomputed radial polynomial coefficients for fast repeated evaluation:
// R^{|j|}_{|j|+2k}(r) = r^{|j|} * sum_t q[t] (r^2)^t.
class RadialTable {
 public:
  explicit RadialTable(int M);

  int order() const { return M_; }
  // Evaluates all radial values for one |j|, k = 0..M-|j|-1, given r and
  // precomputed powers u = r^2. out must hold M - |j| values.
  void eval_radials(int j_abs, double r, std::span<double> out) const;

 private:
  int M_;
  // q-coefficients for (j_abs, k), concatenated; see build order in .cpp.
  std::vector<double> coeffs_;
  std::vector<int> offsets_;
};

}  // namespace zeit
