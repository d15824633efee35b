#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "brank/scalar.hpp"

namespace brank {

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

using Vector = std::vector<Scalar>;

inline bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

/// Dense row-major matrix over Q(i).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionError("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix I(n, n);
    for (std::size_t i = 0; i < n; ++i) I(i, i) = 1;
    return I;
  }

  /// Reshapes a row-major vector of length rows*cols.
  static Matrix from_vector(const Vector& v, std::size_t rows, std::size_t cols) {
    if (v.size() != rows * cols) throw DimensionError("reshape size mismatch");
    Matrix M(rows, cols);
    M.data_ = v;
    return M;
  }

  static Matrix column(const Vector& v) { return from_vector(v, v.size(), 1); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Scalar> entries() const { return data_; }
  const Vector& vec() const { return data_; }

  Vector row(std::size_t i) const { return Vector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }
  Vector col(std::size_t j) const {
    Vector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  bool is_zero() const { return brank::is_zero(data_); }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix T(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) T(j, i) = (*this)(i, j);
    return T;
  }

  Scalar trace() const {
    if (!is_square()) throw DimensionError("trace of a non-square matrix");
    Scalar t;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  Matrix submatrix(std::span<const std::size_t> row_ids, std::span<const std::size_t> col_ids) const {
    Matrix S(row_ids.size(), col_ids.size());
    for (std::size_t a = 0; a < row_ids.size(); ++a)
      for (std::size_t b = 0; b < col_ids.size(); ++b) S(a, b) = (*this)(row_ids[a], col_ids[b]);
    return S;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o, "+");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o, "-");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix& operator*=(const Scalar& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  /// this += s * o
  void add_scaled(const Scalar& s, const Matrix& o) {
    check_same_shape(o, "axpy");
    if (s.is_zero()) return;
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i].add_product(s, o.data_[i]);
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  Matrix operator-() const {
    Matrix N(*this);
    for (auto& x : N.data_) x = -x;
    return N;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw DimensionError("product of " + a.shape() + " and " + b.shape());
    Matrix C(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) C(i, j).add_product(aik, b(k, j));
      }
    return C;
  }

  friend Vector operator*(const Matrix& a, const Vector& x) {
    if (a.cols_ != x.size()) throw DimensionError("matrix-vector size mismatch");
    Vector y(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) y[i].add_product(a(i, k), x[k]);
    return y;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& M) {
    os << "[";
    for (std::size_t i = 0; i < M.rows_; ++i) {
      os << (i ? "; " : "");
      for (std::size_t j = 0; j < M.cols_; ++j) os << (j ? " " : "") << M(i, j);
    }
    return os << "]";
  }

 private:
  void check_same_shape(const Matrix& o, const char* op) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw DimensionError(std::string("shape mismatch in '") + op + "': " + shape() + " vs " + o.shape());
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vector data_;
};

inline Matrix outer(const Vector& u, const Vector& v) {
  Matrix M(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) M(i, j) = u[i] * v[j];
  return M;
}

inline Matrix diagonal(const Vector& d) {
  Matrix M(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) M(i, i) = d[i];
  return M;
}

/// Linear combination sum_k coeffs[k] * mats[k]; all matrices share one shape.
inline Matrix combine(std::span<const Matrix> mats, const Vector& coeffs) {
  if (mats.empty() || coeffs.size() != mats.size()) throw DimensionError("combination size mismatch");
  Matrix M(mats[0].rows(), mats[0].cols());
  for (std::size_t k = 0; k < mats.size(); ++k) M.add_scaled(coeffs[k], mats[k]);
  return M;
}

/// Strictly increasing subset {members} of {0, ..., ambient-1}. Members are
/// stored 0-based; weight() reports the 1-based sum ||alpha|| used in signs.
struct IndexSet {
  std::size_t ambient = 0;
  std::vector<std::size_t> members;

  std::size_t size() const { return members.size(); }

  std::size_t weight() const {
    std::size_t w = 0;
    for (auto a : members) w += a + 1;
    return w;
  }

  IndexSet complement() const {
    IndexSet c{ambient, {}};
    std::size_t next = 0;
    for (std::size_t i = 0; i < ambient; ++i) {
      if (next < members.size() && members[next] == i) {
        ++next;
        continue;
      }
      c.members.push_back(i);
    }
    return c;
  }

  bool valid() const {
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (members[i] >= ambient) return false;
      if (i > 0 && members[i - 1] >= members[i]) return false;
    }
    return true;
  }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
};

/// All k-subsets of an m-set in lexicographic order.
inline std::vector<IndexSet> subsets(std::size_t m, std::size_t k) {
  std::vector<IndexSet> out;
  if (k > m) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(IndexSet{m, cur});
    if (k == 0) break;
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == m - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

inline std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace brank
