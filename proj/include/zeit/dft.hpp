#pragma once

#include "zeit/common.hpp"

namespace zeit {

// Forward DFT of fixed length L: out[n] = sum_l in[l] exp(-2 pi i n l / L).
// One FFTW plan per instance, created unaligned so it can execute on any
// caller buffer; execution is thread safe, construction is not.
class Dft {
 public:
  explicit Dft(int length);
  ~Dft();
  Dft(const Dft&) = delete;
  Dft& operator=(const Dft&) = delete;

  int length() const { return length_; }
  void forward(const Complex* in, Complex* out) const;

 private:
  int length_;
  void* plan_;  // fftw_plan
};

}  // namespace zeit
