#include "zeit/zernike.hpp"

#include <array>
#include <cstdint>

namespace zeit {

namespace {

// Pascal's triangle in exact 64-bit integers, n <= kMaxRadialDegree.
// C(64, 32) = 1832624140942590534 still fits in uint64_t.
struct BinomialTable {
  std::array<std::uint64_t, (kMaxRadialDegree + 1) * (kMaxRadialDegree + 2) / 2> c{};

  constexpr BinomialTable() {
    for (int n = 0, idx = 0; n <= kMaxRadialDegree; ++n) {
      for (int k = 0; k <= n; ++k, ++idx) {
        if (k == 0 || k == n)
          c[idx] = 1;
        else
          c[idx] = c[idx - n - 1] + c[idx - n];  // C(n-1,k-1) + C(n-1,k)
      }
    }
  }

  std::uint64_t at(int n, int k) const { return c[n * (n + 1) / 2 + k]; }
};

const BinomialTable kBinomials{};

}  // namespace

double binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0.0;
  if (n <= kMaxRadialDegree) return static_cast<double>(kBinomials.at(n, k));
  k = std::min(k, n - k);
  double v = 1.0;
  for (int i = 1; i <= k; ++i) v *= static_cast<double>(n - k + i) / i;
  return v;
}

std::uint64_t binomial_exact(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (n > kMaxRadialDegree)
    throw std::invalid_argument("binomial_exact: n exceeds the exact 64-bit table");
  return kBinomials.at(n, k);
}

double radial_poly(int j_abs, int k, double r) {
  if (j_abs < 0 || k < 0) throw std::invalid_argument("radial_poly: negative index");
  if (!(r >= 0.0 && r <= 1.0)) throw std::invalid_argument("radial_poly: r outside [0,1]");
  const int deg = j_abs + 2 * k;
  if (deg > kMaxRadialDegree)
    throw std::invalid_argument("radial_poly: degree |j|+2k exceeds exact-binomial range");

  // sum_{i=0}^{k} (-1)^i C(|j|+2k-i, i) C(|j|+2k-2i, k-i) r^{|j|+2k-2i}
  double sum = 0.0;
  double sign = 1.0;
  for (int i = 0; i <= k; ++i) {
    const double b1 = static_cast<double>(kBinomials.at(deg - i, i));
    const double b2 = static_cast<double>(kBinomials.at(deg - 2 * i, k - i));
    double rp = 1.0;
    for (int e = 0; e < deg - 2 * i; ++e) rp *= r;
    sum += sign * b1 * b2 * rp;
    sign = -sign;
  }
  return sum;
}

Complex zernike_eval(ZernikeIndex idx, double r, double theta) {
  const int j_abs = std::abs(idx.j);
  const double norm = std::sqrt((j_abs + 2 * idx.k + 1) / kPi);
  const double radial = radial_poly(j_abs, idx.k, r);
  return norm * radial * std::polar(1.0, idx.j * theta);
}

RadialTable::RadialTable(int M) : M_(M) {
  if (M < 1) throw std::invalid_argument("RadialTable: M must be >= 1");
  offsets_.assign(static_cast<std::size_t>(M) + 1, 0);
  // Entries grouped by j_abs = 0..M-1; for each, k = 0..M-j_abs-1 with k+1
  // Horner coefficients in ascending powers of u = r^2:
  //   R^{|j|}_{|j|+2k}(r) = r^{|j|} sum_t q_t u^t,
  //   q_t = (-1)^{k-t} C(|j|+k+t, k-t) C(|j|+2t, t).
  for (int j = 0; j < M; ++j) {
    int count = 0;
    for (int k = 0; k < M - j; ++k) count += k + 1;
    offsets_[j + 1] = offsets_[j] + count;
  }
  coeffs_.resize(offsets_[M]);
  std::size_t idx = 0;
  for (int j = 0; j < M; ++j) {
    for (int k = 0; k < M - j; ++k) {
      if (j + 2 * k > kMaxRadialDegree)
        throw std::invalid_argument("RadialTable: degree exceeds exact-binomial range");
      for (int t = 0; t <= k; ++t) {
        const double q = binomial(j + k + t, k - t) * binomial(j + 2 * t, t);
        coeffs_[idx++] = ((k - t) % 2 == 0) ? q : -q;
      }
    }
  }
}

void RadialTable::eval_radials(int j_abs, double r, std::span<double> out) const {
  const double u = r * r;
  double rj = 1.0;
  for (int e = 0; e < j_abs; ++e) rj *= r;
  const double* q = coeffs_.data() + offsets_[j_abs];
  for (int k = 0; k < M_ - j_abs; ++k) {
    double acc = q[k];  // highest power first
    for (int t = k - 1; t >= 0; --t) acc = acc * u + q[t];
    out[k] = rj * acc;
    q += k + 1;
  }
}

std::vector<Complex> eval_expansion(const ZernikeCoefficients& coeffs,
                                    std::span<const std::pair<double, double>> points) {
  const int M = coeffs.order();
  const RadialTable table(M);
  for (const auto& [r, theta] : points) {
    (void)theta;
    if (!(r >= 0.0 && r <= 1.0))
      throw std::invalid_argument("eval_expansion: r outside [0,1]");
  }
  std::vector<Complex> out(points.size());

#pragma omp parallel
  {
    std::vector<double> radials(M);
#pragma omp for schedule(static)
    for (std::ptrdiff_t p = 0; p < static_cast<std::ptrdiff_t>(points.size()); ++p) {
      const auto [r, theta] = points[p];
      const Complex rot = std::polar(1.0, theta);
      Complex phase = 1.0;  // e^{i j theta}, advanced per j
      Complex acc = 0.0;
      for (int j = 0; j < M; ++j) {
        table.eval_radials(j, r, {radials.data(), static_cast<std::size_t>(M - j)});
        auto pos = coeffs.angular(j);
        if (j == 0) {
          Complex s = 0.0;
          for (int k = 0; k < M; ++k)
            s += pos[k] * (std::sqrt((2 * k + 1) / kPi) * radials[k]);
          acc += s;
        } else {
          auto neg = coeffs.angular(-j);
          Complex sp = 0.0, sn = 0.0;
          for (int k = 0; k < M - j; ++k) {
            const double v = std::sqrt((j + 2 * k + 1) / kPi) * radials[k];
            sp += pos[k] * v;
            sn += neg[k] * v;
          }
          acc += sp * phase + sn * std::conj(phase);
        }
        phase *= rot;
      }
      out[p] = acc;
    }
  }
  return out;
}

}  // namespace zeit
