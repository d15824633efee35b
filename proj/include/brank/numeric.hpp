#pragma once

// Floating-point rank-l decomposition by simultaneous diagonalization of the
// mode-3 slices. Advisory only: nothing here feeds a certified verdict.

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "brank/random.hpp"
#include "brank/tensor.hpp"

namespace brank {

using cdouble = std::complex<double>;

struct NumericDecomposition {
  std::vector<std::array<std::vector<cdouble>, 3>> factors;  // (u_i, v_i, w_i)
  double residual = 0;                                       // max-norm of T - sum u_i x v_i x w_i
};

namespace detail {

inline cdouble to_complex(const Scalar& s) { return {s.re().get_d(), s.im().get_d()}; }

inline double reconstruction_residual(const Tensor3& T, const NumericDecomposition& d) {
  double worst = 0;
  for (std::size_t i = 0; i < T.m(); ++i)
    for (std::size_t j = 0; j < T.n(); ++j)
      for (std::size_t k = 0; k < T.l(); ++k) {
        cdouble s = 0;
        for (const auto& f : d.factors) s += f[0][i] * f[1][j] * f[2][k];
        worst = std::max(worst, std::abs(s - to_complex(T(i, j, k))));
      }
  return worst;
}

}  // namespace detail

/// Needs m = n = l = target_rank. A, B are random combinations of the slices;
/// the eigenvectors of A B^{-1} give the u_i, and U^{-1} T_k = D_k V^T gives
/// the v_i and w_i. Returns empty when B is numerically singular or the best
/// residual over a few attempts exceeds the tolerance.
inline std::optional<NumericDecomposition> decompose_numeric(const Tensor3& T, std::size_t target_rank,
                                                             double tolerance, std::uint64_t seed = 0,
                                                             int attempts = 4) {
  const std::size_t r = target_rank;
  if (r == 0 || T.m() != r || T.n() != r || T.l() != r) return std::nullopt;
  using Mat = Eigen::MatrixXcd;
  std::vector<Mat> slices(r, Mat(r, r));
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) slices[k](i, j) = detail::to_complex(T(i, j, k));

  Rng rng(seed);
  std::optional<NumericDecomposition> best;
  for (int attempt = 0; attempt < attempts; ++attempt) {
    Mat A = Mat::Zero(r, r), B = Mat::Zero(r, r);
    for (std::size_t k = 0; k < r; ++k) {
      A += (static_cast<double>(rng.symmetric(1000)) / 997.0) * slices[k];
      B += (static_cast<double>(rng.symmetric(1000)) / 991.0) * slices[k];
    }
    Eigen::FullPivLU<Mat> luB(B);
    if (luB.rank() < static_cast<Eigen::Index>(r)) continue;
    Eigen::ComplexEigenSolver<Mat> es(A * luB.inverse());
    if (es.info() != Eigen::Success) continue;
    const Mat U = es.eigenvectors();
    Eigen::FullPivLU<Mat> luU(U);
    if (luU.rank() < static_cast<Eigen::Index>(r)) continue;
    const Mat Uinv = luU.inverse();

    NumericDecomposition d;
    for (std::size_t i = 0; i < r; ++i) {
      // Row i of U^{-1} T_k is w_i[k] v_i^T.
      Mat rows(r, r);
      for (std::size_t k = 0; k < r; ++k) rows.row(k) = Uinv.row(i) * slices[k];
      Eigen::Index kmax = 0;
      rows.rowwise().norm().maxCoeff(&kmax);
      Eigen::VectorXcd v = rows.row(kmax).transpose();
      const double vn = v.squaredNorm();
      std::array<std::vector<cdouble>, 3> f;
      f[0].resize(r);
      f[1].resize(r);
      f[2].resize(r);
      for (std::size_t a = 0; a < r; ++a) {
        f[0][a] = U(a, i);
        f[1][a] = v(a);
      }
      for (std::size_t k = 0; k < r; ++k)
        f[2][k] = vn > 0 ? cdouble(rows.row(k).dot(v.transpose())) / vn : cdouble(0);
      d.factors.push_back(std::move(f));
    }
    d.residual = detail::reconstruction_residual(T, d);
    if (!best || d.residual < best->residual) best = std::move(d);
  }
  if (!best || !(best->residual <= tolerance)) return std::nullopt;
  return best;
}

}  // namespace brank
