#include "zeit/dft.hpp"

#include <fftw3.h>

#include <vector>

namespace zeit {

Dft::Dft(int length) : length_(length) {
  if (length < 1) throw std::invalid_argument("Dft: length must be >= 1");
  // Plan on a scratch buffer; FFTW_UNALIGNED lets fftw_execute_dft run on
  // arbitrary std::vector storage later.
  std::vector<fftw_complex> scratch(length);
  plan_ = fftw_plan_dft_1d(length, scratch.data(), scratch.data(), FFTW_FORWARD,
                           FFTW_ESTIMATE | FFTW_UNALIGNED);
  if (plan_ == nullptr) throw std::runtime_error("Dft: fftw plan creation failed");
}

Dft::~Dft() { fftw_destroy_plan(static_cast<fftw_plan>(plan_)); }

void Dft::forward(const Complex* in, Complex* out) const {
  // fftw_complex is layout-compatible with std::complex<double>.
  fftw_execute_dft(static_cast<fftw_plan>(plan_),
                   reinterpret_cast<fftw_complex*>(const_cast<Complex*>(in)),
                   reinterpret_cast<fftw_complex*>(out));
}

}  // namespace zeit
