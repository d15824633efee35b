#pragma once

// Slow, independent reference implementations used only as test oracles.

#include <cstddef>
#include <vector>

#include "brank/matrix.hpp"

namespace brank::oracle {

/// Laplace expansion along the first row.
inline Scalar cofactor_det(const Matrix& A) {
  const std::size_t n = A.rows();
  if (n == 0) return 1;
  if (n == 1) return A(0, 0);
  Scalar total;
  std::vector<std::size_t> rows(n - 1), cols(n - 1);
  for (std::size_t i = 1; i < n; ++i) rows[i - 1] = i;
  for (std::size_t j = 0; j < n; ++j) {
    if (A(0, j).is_zero()) continue;
    for (std::size_t b = 0, t = 0; b < n; ++b)
      if (b != j) cols[t++] = b;
    Scalar term = A(0, j) * cofactor_det(A.submatrix(rows, cols));
    if (j % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

/// Largest k with a nonvanishing k x k minor.
inline std::size_t minor_rank(const Matrix& A) {
  for (std::size_t k = std::min(A.rows(), A.cols()); k > 0; --k)
    for (const auto& a : subsets(A.rows(), k))
      for (const auto& b : subsets(A.cols(), k))
        if (!cofactor_det(A.submatrix(a.members, b.members)).is_zero()) return k;
  return 0;
}

}  // namespace brank::oracle
