#pragma once

// Internal raw 6x6 helpers shared by matrix powers and the horizon fitter.
// These operate on plain arrays with no stochasticity checks; callers decide
// what to validate.

#include "covidmc/matrix.hpp"

namespace covidmc::detail {

inline Mat6 identity6() {
  Mat6 r{};
  for (int i = 0; i < 6; ++i) r[i][i] = 1.0;
  return r;
}

inline Mat6 multiply6(const Mat6& a, const Mat6& b) {
  Mat6 r{};
  for (int i = 0; i < 6; ++i)
    for (int k = 0; k < 6; ++k) {
      const double aik = a[i][k];
      if (aik == 0.0) continue;
      for (int j = 0; j < 6; ++j) r[i][j] += aik * b[k][j];
    }
  return r;
}

// Exponentiation by squaring, n >= 0.
inline Mat6 power6(const Mat6& m, long long n) {
  Mat6 result = identity6();
  Mat6 base = m;
  while (n > 0) {
    if (n & 1) result = multiply6(result, base);
    n >>= 1;
    if (n > 0) base = multiply6(base, base);
  }
  return result;
}

}  // namespace covidmc::detail
