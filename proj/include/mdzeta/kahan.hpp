#pragma once

#include <complex>

namespace mdzeta {

/// Neumaier-compensated accumulator; drop-in for += / read.
struct KahanSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double v) {
    double t = sum + v;
    if (std::abs(sum) >= std::abs(v))
      comp += (sum - t) + v;
    else
      comp += (v - t) + sum;
    sum = t;
  }
  double result() const { return sum + comp; }
};

struct KahanComplexSum {
  KahanSum re, im;

  void add(std::complex<double> v) {
    re.add(v.real());
    im.add(v.imag());
  }
  std::complex<double> result() const { return {re.result(), im.result()}; }
};

}  // namespace mdzeta
