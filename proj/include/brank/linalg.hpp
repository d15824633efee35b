#pragma once

// Exact linear algebra kernel over Q(i): determinant, rank, adjugate,
// compound matrices, nullspaces and cofactor nullvectors.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "brank/matrix.hpp"

namespace brank {

namespace detail {

inline Scalar det_small(const Matrix& A) {
  switch (A.rows()) {
    case 0:
      return 1;
    case 1:
      return A(0, 0);
    case 2: {
      Scalar d = A(0, 0) * A(1, 1);
      d -= A(0, 1) * A(1, 0);
      return d;
    }
    default: {
      Scalar d;
      d.add_product(A(0, 0), A(1, 1) * A(2, 2) - A(1, 2) * A(2, 1));
      d.add_product(A(0, 1), A(1, 2) * A(2, 0) - A(1, 0) * A(2, 2));
      d.add_product(A(0, 2), A(1, 0) * A(2, 1) - A(1, 1) * A(2, 0));
      return d;
    }
  }
}

/// One fraction-free elimination step on rows below `pivot_row`:
/// M(i, j) <- (M(i, j) * M(r, c) - M(i, c) * M(r, j)) / prev for j > c.
inline void bareiss_step(Matrix& M, std::size_t r, std::size_t c, const Scalar& prev) {
  const Scalar pivot = M(r, c);
  for (std::size_t i = r + 1; i < M.rows(); ++i) {
    const Scalar lead = M(i, c);
    for (std::size_t j = c + 1; j < M.cols(); ++j) {
      Scalar v = M(i, j) * pivot;
      if (!lead.is_zero()) v -= lead * M(r, j);
      if (!(prev == Scalar(1))) v /= prev;
      M(i, j) = std::move(v);
    }
    M(i, c) = 0;
  }
}

inline void swap_rows(Matrix& M, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < M.cols(); ++j) std::swap(M(a, j), M(b, j));
}

inline void require_square(const Matrix& A, const char* what) {
  if (!A.is_square()) throw DimensionError(std::string(what) + " requires a square matrix, got " + A.shape());
}

}  // namespace detail

/// Exact determinant. Fraction-free (Bareiss) elimination above 3x3.
inline Scalar det(const Matrix& A) {
  detail::require_square(A, "det");
  const std::size_t n = A.rows();
  if (n <= 3) return detail::det_small(A);
  Matrix M = A;
  Scalar prev = 1;
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && M(p, k).is_zero()) ++p;
    if (p == n) return 0;
    if (p != k) {
      detail::swap_rows(M, p, k);
      negate = !negate;
    }
    if (k + 1 < n) detail::bareiss_step(M, k, k, prev);
    prev = M(k, k);
  }
  return negate ? -M(n - 1, n - 1) : M(n - 1, n - 1);
}

/// Exact rank over Q(i) by fraction-free row echelon reduction.
inline std::size_t rank(const Matrix& A) {
  Matrix M = A;
  Scalar prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < M.cols() && r < M.rows(); ++c) {
    std::size_t p = r;
    while (p < M.rows() && M(p, c).is_zero()) ++p;
    if (p == M.rows()) continue;
    detail::swap_rows(M, p, r);
    detail::bareiss_step(M, r, c, prev);
    prev = M(r, c);
    ++r;
  }
  return r;
}

/// Reduced row echelon form; `pivots` receives the pivot column of each nonzero row.
inline Matrix rref(const Matrix& A, std::vector<std::size_t>* pivots = nullptr) {
  Matrix M = A;
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < M.cols() && r < M.rows(); ++c) {
    std::size_t p = r;
    while (p < M.rows() && M(p, c).is_zero()) ++p;
    if (p == M.rows()) continue;
    detail::swap_rows(M, p, r);
    const Scalar inv = M(r, c).inverse();
    for (std::size_t j = c; j < M.cols(); ++j) M(r, j) *= inv;
    for (std::size_t i = 0; i < M.rows(); ++i) {
      if (i == r || M(i, c).is_zero()) continue;
      const Scalar f = M(i, c);
      for (std::size_t j = c; j < M.cols(); ++j) {
        if (!M(r, j).is_zero()) M(i, j) -= f * M(r, j);
      }
    }
    piv.push_back(c);
    ++r;
  }
  if (pivots) *pivots = std::move(piv);
  return M;
}

/// Basis of {x : A x = 0}; one vector per free column, with that coordinate equal to 1.
inline std::vector<Vector> nullspace(const Matrix& A) {
  std::vector<std::size_t> piv;
  const Matrix R = rref(A, &piv);
  std::vector<bool> is_pivot(A.cols(), false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < A.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector x(A.cols());
    x[free] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = -R(r, free);
    basis.push_back(std::move(x));
  }
  return basis;
}

inline Matrix inverse(const Matrix& A) {
  detail::require_square(A, "inverse");
  const std::size_t n = A.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = A(i, j);
    aug(i, n + i) = 1;
  }
  std::vector<std::size_t> piv;
  const Matrix R = rref(aug, &piv);
  if (piv.size() < n || piv[n - 1] != n - 1) throw PreconditionError("matrix is singular");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = R(i, n + j);
  return inv;
}

/// Minor det A[alpha, beta].
inline Scalar minor(const Matrix& A, const IndexSet& alpha, const IndexSet& beta) {
  return det(A.submatrix(alpha.members, beta.members));
}

/// Transposed cofactor matrix; A * adj(A) = det(A) * I. adj of a 1x1 matrix is [[1]].
inline Matrix adjugate(const Matrix& A) {
  detail::require_square(A, "adjugate");
  const std::size_t m = A.rows();
  if (m == 0) throw DimensionError("adjugate of an empty matrix");
  if (m == 1) return Matrix{{1}};
  Matrix adj(m, m);
  std::vector<std::size_t> rows_keep(m - 1), cols_keep(m - 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t a = 0, t = 0; a < m; ++a)
      if (a != i) rows_keep[t++] = a;
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t b = 0, t = 0; b < m; ++b)
        if (b != j) cols_keep[t++] = b;
      Scalar c = det(A.submatrix(rows_keep, cols_keep));
      adj(j, i) = ((i + j) % 2 == 0) ? c : -c;
    }
  }
  return adj;
}

/// p-th compound: all p x p minors, rows and columns in lexicographic IndexSet order.
inline Matrix compound(const Matrix& A, std::size_t p) {
  if (p < 1 || p > std::min(A.rows(), A.cols()))
    throw ArgumentError("compound order " + std::to_string(p) + " out of range for " + A.shape());
  const auto rs = subsets(A.rows(), p);
  const auto cs = subsets(A.cols(), p);
  Matrix C(rs.size(), cs.size());
  for (std::size_t a = 0; a < rs.size(); ++a)
    for (std::size_t b = 0; b < cs.size(); ++b) C(a, b) = minor(A, rs[a], cs[b]);
  return C;
}

/// C_{-p}(A): entry (alpha, beta) is (-1)^(||alpha||+||beta||) det A[alpha^c, beta^c].
/// Satisfies compound(A, p) * signed_compound(A, p)^T = det(A) * I.
inline Matrix signed_compound(const Matrix& A, std::size_t p) {
  detail::require_square(A, "signed_compound");
  const std::size_t m = A.rows();
  if (p < 1 || p + 1 > m)
    throw ArgumentError("signed compound order " + std::to_string(p) + " out of range for " + A.shape());
  const auto idx = subsets(m, p);
  std::vector<IndexSet> comp;
  comp.reserve(idx.size());
  for (const auto& s : idx) comp.push_back(s.complement());
  Matrix C(idx.size(), idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b) {
      Scalar v = minor(A, comp[a], comp[b]);
      C(a, b) = ((idx[a].weight() + idx[b].weight()) % 2 == 0) ? v : -v;
    }
  return C;
}

/// Signed-minor nullvector x(alpha, beta): zero off beta, and
/// x[beta_i] = (-1)^(i-1) det A[alpha, beta \ {beta_i}] (i counted from 1).
/// Requires rank(A) <= k = |alpha| < cols and |beta| = k + 1.
inline Vector cofactor_nullvector(const Matrix& A, const IndexSet& alpha, const IndexSet& beta) {
  const std::size_t k = alpha.size();
  if (beta.size() != k + 1) throw ArgumentError("|beta| must equal |alpha| + 1");
  if (alpha.ambient != A.rows() || beta.ambient != A.cols() || !alpha.valid() || !beta.valid())
    throw ArgumentError("index sets do not fit " + A.shape());
  if (k >= A.cols()) throw ArgumentError("|alpha| must be smaller than the column count");
  if (rank(A) > k) throw PreconditionError("rank(A) exceeds |alpha| = " + std::to_string(k));
  Vector x(A.cols());
  std::vector<std::size_t> cols(k);
  for (std::size_t i = 0; i <= k; ++i) {
    for (std::size_t b = 0, t = 0; b <= k; ++b)
      if (b != i) cols[t++] = beta.members[b];
    Scalar v = det(A.submatrix(alpha.members, cols));
    x[beta.members[i]] = (i % 2 == 0) ? v : -v;
  }
  return x;
}

/// Rank of the span of a family of equally shaped matrices.
inline std::size_t span_rank(std::span<const Matrix> mats) {
  if (mats.empty()) return 0;
  Matrix stacked(mats.size(), mats[0].rows() * mats[0].cols());
  for (std::size_t k = 0; k < mats.size(); ++k) {
    if (mats[k].rows() != mats[0].rows() || mats[k].cols() != mats[0].cols())
      throw DimensionError("span of differently shaped matrices");
    for (std::size_t e = 0; e < mats[k].vec().size(); ++e) stacked(k, e) = mats[k].vec()[e];
  }
  return rank(stacked);
}

/// Indices of a maximal linearly independent subfamily, chosen greedily in order.
inline std::vector<std::size_t> independent_subset(std::span<const Matrix> mats) {
  std::vector<std::size_t> keep;
  std::vector<Matrix> chosen;
  for (std::size_t k = 0; k < mats.size(); ++k) {
    chosen.push_back(mats[k]);
    if (span_rank(chosen) == chosen.size()) {
      keep.push_back(k);
    } else {
      chosen.pop_back();
    }
  }
  return keep;
}

}  // namespace brank
