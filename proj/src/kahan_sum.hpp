#pragma once

#include <cmath>

#include "anndiff/types.hpp"

namespace anndiff::detail {

// Neumaier-compensated accumulator; keeps long uniform-grid sums near one ulp.
struct NeumaierReal {
  double sum = 0.0;
  double comp = 0.0;
  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

struct NeumaierComplex {
  NeumaierReal re, im;
  void add(const Complex& x) {
    re.add(x.real());
    im.add(x.imag());
  }
  Complex value() const { return {re.value(), im.value()}; }
};

}  // namespace anndiff::detail
