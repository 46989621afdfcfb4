#pragma once

// Small dense Gaussian elimination with partial pivoting. Sizes here are at
// most 11x11, so no pivoting-growth or blocking concerns apply.

#include <cmath>
#include <vector>

namespace covidmc::detail {

using DenseMatrix = std::vector<std::vector<double>>;

// Solves A * X = B in place of a copy; returns false on an exactly zero pivot.
inline bool solve_dense(DenseMatrix a, DenseMatrix b, DenseMatrix& x) {
  const int n = static_cast<int>(a.size());
  const int m = b.empty() ? 0 : static_cast<int>(b[0].size());
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r)
      if (std::fabs(a[r][col]) > std::fabs(a[pivot][col])) pivot = r;
    if (a[pivot][col] == 0.0) return false;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    const double inv = 1.0 / a[col][col];
    for (int r = col + 1; r < n; ++r) {
      const double factor = a[r][col] * inv;
      if (factor == 0.0) continue;
      for (int c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
      for (int c = 0; c < m; ++c) b[r][c] -= factor * b[col][c];
    }
  }
  x.assign(n, std::vector<double>(m, 0.0));
  for (int r = n - 1; r >= 0; --r) {
    for (int c = 0; c < m; ++c) {
      double s = b[r][c];
      for (int k = r + 1; k < n; ++k) s -= a[r][k] * x[k][c];
      x[r][c] = s / a[r][r];
    }
  }
  return true;
}

inline DenseMatrix identity_dense(int n) {
  DenseMatrix id(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) id[i][i] = 1.0;
  return id;
}

// Maximum absolute column sum.
inline double norm1(const DenseMatrix& a) {
  if (a.empty()) return 0.0;
  const int n = static_cast<int>(a.size());
  const int m = static_cast<int>(a[0].size());
  double best = 0.0;
  for (int c = 0; c < m; ++c) {
    double s = 0.0;
    for (int r = 0; r < n; ++r) s += std::fabs(a[r][c]);
    if (s > best) best = s;
  }
  return best;
}

}  // namespace covidmc::detail
