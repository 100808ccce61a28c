#include "zeit/common.hpp"

#include <algorithm>

namespace zeit {

double AngularVector::conjugate_asymmetry() const {
  double worst = 0.0;
  for (int j = 0; j <= M_ - 1; ++j) {
    auto pos = angular(j);
    auto neg = angular(-j);
    for (int k = 0; k < size(j); ++k)
      worst = std::max(worst, std::abs(neg[k] - std::conj(pos[k])));
  }
  return worst;
}

void AngularVector::symmetrize() {
  for (int j = 0; j <= M_ - 1; ++j) {
    auto pos = angular(j);
    auto neg = angular(-j);
    for (int k = 0; k < size(j); ++k) {
      Complex avg = 0.5 * (pos[k] + std::conj(neg[k]));
      pos[k] = avg;
      neg[k] = std::conj(avg);
    }
  }
}

double AngularVector::norm2() const {
  double s = 0.0;
  for (const Complex& v : values_) s += std::norm(v);
  return std::sqrt(s);
}

}  // namespace zeit
