#pragma once

// Dense 3-tensors, their slices and slice spaces, basis change, mode
// permutation, common kernels and the 4x4x4 -> 3x3x4 reduction.
//
// Modes are numbered 1, 2, 3. Slice and entry indices are 0-based in code.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "brank/linalg.hpp"

namespace brank {

using Dims = std::array<std::size_t, 3>;
using ModePermutation = std::array<int, 3>;  // perm[p-1] = image of mode p

class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(std::size_t m, std::size_t n, std::size_t l) : dims_{m, n, l}, data_(m * n * l) {}
  explicit Tensor3(Dims d) : Tensor3(d[0], d[1], d[2]) {}

  /// Entries in (i, j, k) lexicographic order, i slowest.
  static Tensor3 from_entries(Dims d, Vector entries) {
    if (entries.size() != d[0] * d[1] * d[2]) throw DimensionError("entry count does not match dims");
    Tensor3 T(d);
    T.data_ = std::move(entries);
    return T;
  }

  /// Builds an m x n x l tensor from its l mode-3 slices (each m x n).
  static Tensor3 from_slices(std::span<const Matrix> slices) {
    if (slices.empty()) throw DimensionError("no slices");
    Tensor3 T(slices[0].rows(), slices[0].cols(), slices.size());
    for (std::size_t k = 0; k < slices.size(); ++k) {
      if (slices[k].rows() != T.m() || slices[k].cols() != T.n()) throw DimensionError("slice shapes differ");
      for (std::size_t i = 0; i < T.m(); ++i)
        for (std::size_t j = 0; j < T.n(); ++j) T(i, j, k) = slices[k](i, j);
    }
    return T;
  }

  static Tensor3 rank_one(const Vector& u, const Vector& v, const Vector& w) {
    Tensor3 T(u.size(), v.size(), w.size());
    T.add_rank_one(u, v, w);
    return T;
  }

  void add_rank_one(const Vector& u, const Vector& v, const Vector& w) {
    if (u.size() != m() || v.size() != n() || w.size() != l()) throw DimensionError("rank-one term size mismatch");
    for (std::size_t i = 0; i < m(); ++i) {
      if (u[i].is_zero()) continue;
      for (std::size_t j = 0; j < n(); ++j) {
        if (v[j].is_zero()) continue;
        const Scalar uv = u[i] * v[j];
        for (std::size_t k = 0; k < l(); ++k) (*this)(i, j, k).add_product(uv, w[k]);
      }
    }
  }

  std::size_t m() const { return dims_[0]; }
  std::size_t n() const { return dims_[1]; }
  std::size_t l() const { return dims_[2]; }
  const Dims& dims() const { return dims_; }
  std::size_t extent(int mode) const { return dims_.at(static_cast<std::size_t>(mode - 1)); }

  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * n() + j) * l() + k]; }
  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * n() + j) * l() + k];
  }
  const Scalar& at(const std::array<std::size_t, 3>& idx) const { return (*this)(idx[0], idx[1], idx[2]); }
  Scalar& at(const std::array<std::size_t, 3>& idx) { return (*this)(idx[0], idx[1], idx[2]); }

  const Vector& entries() const { return data_; }
  bool is_zero() const { return brank::is_zero(data_); }

  Tensor3& operator+=(const Tensor3& o) {
    if (dims_ != o.dims_) throw DimensionError("tensor dims differ");
    for (std::size_t e = 0; e < data_.size(); ++e) data_[e] += o.data_[e];
    return *this;
  }
  friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
  friend bool operator==(const Tensor3& a, const Tensor3& b) { return a.dims_ == b.dims_ && a.data_ == b.data_; }

  std::string shape() const {
    return std::to_string(m()) + "x" + std::to_string(n()) + "x" + std::to_string(l());
  }

 private:
  Dims dims_{0, 0, 0};
  Vector data_;
};

inline void check_mode(int mode) {
  if (mode < 1 || mode > 3) throw ArgumentError("mode must be 1, 2 or 3, got " + std::to_string(mode));
}

/// The k-th slice in the given mode. Mode 3: m x n with entries t(i,j,k).
/// Mode 1: n x l with rows j and columns k. Mode 2: m x l with rows i and columns k.
inline Matrix slice(const Tensor3& T, int mode, std::size_t k) {
  check_mode(mode);
  if (k >= T.extent(mode))
    throw ArgumentError("slice index " + std::to_string(k) + " out of range for mode " + std::to_string(mode));
  switch (mode) {
    case 1: {
      Matrix S(T.n(), T.l());
      for (std::size_t j = 0; j < T.n(); ++j)
        for (std::size_t c = 0; c < T.l(); ++c) S(j, c) = T(k, j, c);
      return S;
    }
    case 2: {
      Matrix S(T.m(), T.l());
      for (std::size_t i = 0; i < T.m(); ++i)
        for (std::size_t c = 0; c < T.l(); ++c) S(i, c) = T(i, k, c);
      return S;
    }
    default: {
      Matrix S(T.m(), T.n());
      for (std::size_t i = 0; i < T.m(); ++i)
        for (std::size_t j = 0; j < T.n(); ++j) S(i, j) = T(i, j, k);
      return S;
    }
  }
}

struct SliceSpace {
  int mode = 3;
  std::vector<Matrix> slices;  // raw slices in index order, possibly dependent
  std::size_t span_dim = 0;
};

inline SliceSpace slice_space(const Tensor3& T, int mode) {
  check_mode(mode);
  SliceSpace S{mode, {}, 0};
  for (std::size_t k = 0; k < T.extent(mode); ++k) S.slices.push_back(slice(T, mode, k));
  S.span_dim = span_rank(S.slices);
  return S;
}

/// Entry-wise T(P,Q,R)[i',j',k'] = sum p(i',i) q(j',j) r(k',k) t(i,j,k).
/// Factors may be rectangular as long as their column counts match the dims.
inline Tensor3 change_basis(const Tensor3& T, const Matrix& P, const Matrix& Q, const Matrix& R) {
  if (P.cols() != T.m() || Q.cols() != T.n() || R.cols() != T.l())
    throw DimensionError("basis change " + P.shape() + ", " + Q.shape() + ", " + R.shape() + " does not fit " +
                         T.shape());
  Tensor3 A(P.rows(), T.n(), T.l());
  for (std::size_t a = 0; a < P.rows(); ++a)
    for (std::size_t i = 0; i < T.m(); ++i) {
      if (P(a, i).is_zero()) continue;
      for (std::size_t j = 0; j < T.n(); ++j)
        for (std::size_t k = 0; k < T.l(); ++k) A(a, j, k).add_product(P(a, i), T(i, j, k));
    }
  Tensor3 B(P.rows(), Q.rows(), T.l());
  for (std::size_t a = 0; a < P.rows(); ++a)
    for (std::size_t b = 0; b < Q.rows(); ++b)
      for (std::size_t j = 0; j < T.n(); ++j) {
        if (Q(b, j).is_zero()) continue;
        for (std::size_t k = 0; k < T.l(); ++k) B(a, b, k).add_product(Q(b, j), A(a, j, k));
      }
  Tensor3 C(P.rows(), Q.rows(), R.rows());
  for (std::size_t a = 0; a < P.rows(); ++a)
    for (std::size_t b = 0; b < Q.rows(); ++b)
      for (std::size_t c = 0; c < R.rows(); ++c)
        for (std::size_t k = 0; k < T.l(); ++k) C(a, b, c).add_product(R(c, k), B(a, b, k));
  return C;
}

inline bool is_permutation(const ModePermutation& perm) {
  std::array<bool, 3> seen{};
  for (int p : perm) {
    if (p < 1 || p > 3 || seen[p - 1]) return false;
    seen[p - 1] = true;
  }
  return true;
}

inline ModePermutation inverse_permutation(const ModePermutation& perm) {
  ModePermutation inv{};
  for (int p = 1; p <= 3; ++p) inv[perm[p - 1] - 1] = p;
  return inv;
}

/// Relabels modes: mode p of T becomes mode perm[p-1] of the result.
inline Tensor3 permute_modes(const Tensor3& T, const ModePermutation& perm) {
  if (!is_permutation(perm)) throw ArgumentError("not a permutation of {1,2,3}");
  Dims d{};
  for (std::size_t p = 0; p < 3; ++p) d[perm[p] - 1] = T.dims()[p];
  Tensor3 out(d);
  std::array<std::size_t, 3> idx{}, to{};
  for (idx[0] = 0; idx[0] < T.m(); ++idx[0])
    for (idx[1] = 0; idx[1] < T.n(); ++idx[1])
      for (idx[2] = 0; idx[2] < T.l(); ++idx[2]) {
        for (std::size_t p = 0; p < 3; ++p) to[perm[p] - 1] = idx[p];
        out.at(to) = T.at(idx);
      }
  return out;
}

/// Basis of {u : u^T A = 0 for every slice A}.
inline std::vector<Vector> common_left_kernel(const SliceSpace& S) {
  if (S.slices.empty()) throw ArgumentError("empty slice space");
  const std::size_t rows = S.slices[0].rows(), cols = S.slices[0].cols();
  Matrix M(S.slices.size() * cols, rows);  // stacked transposes
  for (std::size_t k = 0; k < S.slices.size(); ++k)
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) M(k * cols + j, i) = S.slices[k](i, j);
  return nullspace(M);
}

/// Basis of {u : A u = 0 for every slice A}.
inline std::vector<Vector> common_right_kernel(const SliceSpace& S) {
  if (S.slices.empty()) throw ArgumentError("empty slice space");
  const std::size_t rows = S.slices[0].rows(), cols = S.slices[0].cols();
  Matrix M(S.slices.size() * rows, cols);
  for (std::size_t k = 0; k < S.slices.size(); ++k)
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) M(k * rows + i, j) = S.slices[k](i, j);
  return nullspace(M);
}

/// Coefficient vectors c with sum c_k S.slices[k] = 0.
inline std::vector<Vector> slice_dependencies(const SliceSpace& S) {
  if (S.slices.empty()) return {};
  const std::size_t e = S.slices[0].vec().size();
  Matrix M(e, S.slices.size());
  for (std::size_t k = 0; k < S.slices.size(); ++k)
    for (std::size_t t = 0; t < e; ++t) M(t, k) = S.slices[k].vec()[t];
  return nullspace(M);
}

/// Output of reduce_to_334. `basis[p-1]` is the invertible basis change used in
/// mode p of the input; `perm` then relabels the modes so that the two reduced
/// modes come first. The 3x3x4 tensor is the leading corner of
/// permute_modes(change_basis(T, basis...), perm).
struct Reduction334 {
  Tensor3 tensor;
  std::array<Matrix, 3> basis;
  ModePermutation perm{1, 2, 3};
  int first_mode = 0;
  int second_mode = 0;
};

/// An invertible matrix whose last row is `c` and whose other rows are unit
/// vectors; requires c != 0.
inline Matrix completion_with_last_row(const Vector& c) {
  const std::size_t n = c.size();
  std::size_t pivot = n;
  for (std::size_t a = n; a-- > 0;)
    if (!c[a].is_zero()) {
      pivot = a;
      break;
    }
  if (pivot == n) throw PreconditionError("zero dependency vector");
  Matrix P(n, n);
  for (std::size_t a = 0, row = 0; a < n; ++a)
    if (a != pivot) P(row++, a) = 1;
  for (std::size_t a = 0; a < n; ++a) P(n - 1, a) = c[a];
  return P;
}

inline std::optional<Reduction334> reduce_to_334(const Tensor3& T) {
  if (T.dims() != Dims{4, 4, 4}) throw DimensionError("reduce_to_334 expects a 4x4x4 tensor, got " + T.shape());
  std::array<std::size_t, 3> dim{};
  for (int p = 1; p <= 3; ++p) dim[p - 1] = slice_space(T, p).span_dim;
  for (int p = 1; p <= 3; ++p)
    for (int q = p + 1; q <= 3; ++q) {
      if (dim[p - 1] > 3 || dim[q - 1] > 3) continue;
      Reduction334 red;
      red.first_mode = p;
      red.second_mode = q;
      for (int r = 1; r <= 3; ++r) {
        if (r == p || r == q) {
          const auto deps = slice_dependencies(slice_space(T, r));
          red.basis[r - 1] = completion_with_last_row(deps.front());
        } else {
          red.basis[r - 1] = Matrix::identity(4);
        }
      }
      const int third = 6 - p - q;
      red.perm[p - 1] = 1;
      red.perm[q - 1] = 2;
      red.perm[third - 1] = 3;
      const Tensor3 moved = permute_modes(change_basis(T, red.basis[0], red.basis[1], red.basis[2]), red.perm);
      red.tensor = Tensor3(3, 3, 4);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
          for (std::size_t k = 0; k < 4; ++k) red.tensor(i, j, k) = moved(i, j, k);
      return red;
    }
  return std::nullopt;
}

/// Inverse of reduce_to_334: pads the 3x3x4 tensor with zeros, undoes the
/// mode relabelling and applies the inverse basis changes.
inline Tensor3 expand_from_334(const Reduction334& red) {
  Tensor3 padded(4, 4, 4);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 4; ++k) padded(i, j, k) = red.tensor(i, j, k);
  const Tensor3 back = permute_modes(padded, inverse_permutation(red.perm));
  return change_basis(back, inverse(red.basis[0]), inverse(red.basis[1]), inverse(red.basis[2]));
}

}  // namespace brank
