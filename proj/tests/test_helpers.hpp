#pragma once

// Test-only oracles, kept independent of the implementation paths they check.

#include <vector>

#include "nilcat/matrix.hpp"
#include "nilcat/prng.hpp"

namespace testutil {

using nilcat::Matrix;
using nilcat::Rational;

// Determinant by cofactor expansion; fine for the tiny oracle sizes.
inline Rational det_cofactor(const Matrix& m) {
  const int n = m.rows();
  if (n == 0) return Rational(1);
  if (n == 1) return m(0, 0);
  Rational acc(0);
  for (int c = 0; c < n; ++c) {
    if (nilcat::is_zero(m(0, c))) continue;
    Matrix minor(n - 1, n - 1);
    for (int i = 1; i < n; ++i) {
      int jj = 0;
      for (int j = 0; j < n; ++j) {
        if (j == c) continue;
        minor(i - 1, jj++) = m(i, j);
      }
    }
    const Rational term = m(0, c) * det_cofactor(minor);
    acc += (c % 2 == 0) ? term : -term;
  }
  return acc;
}

// Rank as the largest size of a nonzero minor, by brute force enumeration.
inline int rank_by_minors(const Matrix& m) {
  const int rows = m.rows(), cols = m.cols();
  const int maxs = rows < cols ? rows : cols;
  for (int s = maxs; s >= 1; --s) {
    std::vector<int> ri(s), ci(s);
    for (int i = 0; i < s; ++i) ri[i] = i;
    while (true) {
      for (int i = 0; i < s; ++i) ci[i] = i;
      while (true) {
        Matrix sub(s, s);
        for (int i = 0; i < s; ++i)
          for (int j = 0; j < s; ++j) sub(i, j) = m(ri[i], ci[j]);
        if (!nilcat::is_zero(det_cofactor(sub))) return s;
        int j = s - 1;
        while (j >= 0 && ci[j] == cols - s + j) --j;
        if (j < 0) break;
        ++ci[j];
        for (int t = j + 1; t < s; ++t) ci[t] = ci[t - 1] + 1;
      }
      int i = s - 1;
      while (i >= 0 && ri[i] == rows - s + i) --i;
      if (i < 0) break;
      ++ri[i];
      for (int t = i + 1; t < s; ++t) ri[t] = ri[t - 1] + 1;
    }
  }
  return 0;
}

inline Matrix random_matrix(nilcat::SplitMix64& rng, int rows, int cols, int lo, int hi) {
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = rng.range(lo, hi);
  return m;
}

}  // namespace testutil
