#pragma once

// Commutation conditions on slice spans, the Strassen invariant, and the
// border-rank decisions for 3x3x3 tensors.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "brank/linalg.hpp"
#include "brank/symmetrize.hpp"
#include "brank/tensor.hpp"
#include "brank/verdict.hpp"

namespace brank {

/// X adj(Y) Z - Z adj(Y) X.
inline Matrix strassen_commutator(const Matrix& X, const Matrix& Y, const Matrix& Z) {
  if (!X.is_square() || X.shape() != Y.shape() || X.shape() != Z.shape())
    throw DimensionError("commutator needs equal square matrices");
  const Matrix adjY = adjugate(Y);
  return X * adjY * Z - Z * adjY * X;
}

/// C_p(A) C_{-p}(B)^T C_p(C) - C_p(C) C_{-p}(B)^T C_p(A).
inline Matrix compound_commutator(const Matrix& A, const Matrix& B, const Matrix& C, std::size_t p) {
  if (!A.is_square() || A.shape() != B.shape() || A.shape() != C.shape())
    throw DimensionError("compound commutator needs equal square matrices");
  if (p < 1 || p + 1 > A.rows()) throw ArgumentError("compound level out of range");
  const Matrix CA = compound(A, p), CC = compound(C, p);
  const Matrix mid = signed_compound(B, p).transpose();
  return CA * mid * CC - CC * mid * CA;
}

struct CommutationReport {
  int mode = 3;
  std::size_t p = 1;
  bool holds = true;
  std::optional<std::array<Vector, 3>> witness;  // raw-slice coefficients (x, y, z)
  Matrix defect;                                 // commutator value at the witness
};

inline json to_json(const CommutationReport& r) {
  json j{{"mode", r.mode}, {"p", r.p}, {"holds", r.holds}};
  if (r.witness) {
    j["witness"] = json{{"x", to_json((*r.witness)[0])}, {"y", to_json((*r.witness)[1])},
                        {"z", to_json((*r.witness)[2])}};
    j["defect"] = to_json(r.defect);
  }
  return j;
}

namespace detail {

/// {alpha in N^d : |alpha| = degree}, in lexicographically decreasing order.
inline std::vector<Vector> simplex_lattice(std::size_t d, std::size_t degree) {
  std::vector<Vector> out;
  std::vector<long> cur(d, 0);
  auto rec = [&](auto&& self, std::size_t pos, long left) -> void {
    if (pos + 1 == d) {
      cur[pos] = left;
      out.emplace_back(cur.begin(), cur.end());
      return;
    }
    for (long v = left; v >= 0; --v) {
      cur[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  if (d > 0) rec(rec, 0, static_cast<long>(degree));
  return out;
}

}  // namespace detail

/// Decides whether compound_commutator(X, Y, Z, p) vanishes for all X, Y, Z in
/// the span of the slices. The defect is homogeneous of degree p in the
/// coefficients of X and of Z and of degree m-p in those of Y, so it vanishes
/// identically iff it vanishes on the product of simplex lattices
/// {alpha : |alpha| = degree}, which are unisolvent for homogeneous forms. X
/// and Z enter only through C_p(X), C_p(Z) and the defect is antisymmetric in
/// them, so it suffices to test pairs from a basis of span{C_p(X_a)}.
inline CommutationReport span_commutation_ok(const SliceSpace& S, std::size_t p) {
  CommutationReport rep;
  rep.mode = S.mode;
  rep.p = p;
  if (S.slices.empty()) return rep;
  const std::size_t m = S.slices[0].rows();
  for (const auto& A : S.slices)
    if (A.rows() != m || A.cols() != m) throw DimensionError("commutation test needs square slices");
  if (p < 1 || p + 1 > m) throw ArgumentError("compound level out of range");

  const auto basis_idx = independent_subset(S.slices);
  const std::size_t d = basis_idx.size();
  if (d == 0) return rep;
  std::vector<Matrix> basis;
  for (auto k : basis_idx) basis.push_back(S.slices[k]);

  const auto xs = detail::simplex_lattice(d, p);
  const auto ys = detail::simplex_lattice(d, m - p);
  std::vector<Matrix> cx;
  for (const auto& x : xs) cx.push_back(compound(combine(basis, x), p));
  const auto keep = independent_subset(cx);

  auto raw = [&](const Vector& c) {
    Vector full(S.slices.size());
    for (std::size_t t = 0; t < d; ++t) full[basis_idx[t]] = c[t];
    return full;
  };

  std::vector<Matrix> prod(keep.size());
  for (const auto& y : ys) {
    const Matrix mid = signed_compound(combine(basis, y), p).transpose();
    for (std::size_t a = 0; a < keep.size(); ++a) prod[a] = cx[keep[a]] * mid;
    for (std::size_t a = 0; a < keep.size(); ++a)
      for (std::size_t b = a + 1; b < keep.size(); ++b) {
        Matrix D = prod[a] * cx[keep[b]] - prod[b] * cx[keep[a]];
        if (D.is_zero()) continue;
        rep.holds = false;
        rep.witness = std::array<Vector, 3>{raw(xs[keep[a]]), raw(y), raw(xs[keep[b]])};
        rep.defect = std::move(D);
        return rep;
      }
  }
  return rep;
}

/// det C_R(T1, T2, T3): a nonzero constant multiple of the Strassen invariant.
inline Scalar strassen_value(const Matrix& T1, const Matrix& T2, const Matrix& T3, Side side = Side::R) {
  const std::array<Matrix, 3> s{T1, T2, T3};
  for (const auto& T : s)
    if (T.rows() != 3 || T.cols() != 3) throw DimensionError("Strassen invariant needs 3x3 slices");
  return det(build_system(s, side).coeff);
}

inline bool strassen_vanishes(const Matrix& T1, const Matrix& T2, const Matrix& T3) {
  return strassen_value(T1, T2, T3).is_zero();
}

inline void require_dims(const Tensor3& T, Dims d, const char* what) {
  if (T.dims() != d)
    throw DimensionError(std::string(what) + " expects " + std::to_string(d[0]) + "x" + std::to_string(d[1]) + "x" +
                         std::to_string(d[2]) + ", got " + T.shape());
}

/// Border rank <= 3 iff some mode's slice span satisfies the commutation condition.
inline Verdict decide_333_br3(const Tensor3& T) {
  require_dims(T, {3, 3, 3}, "decide_333_br3");
  Verdict v;
  v.outcome = Outcome::reject;
  v.rule = "commutation-all-modes-fail";
  for (int mode = 1; mode <= 3; ++mode) {
    const SliceSpace S = slice_space(T, mode);
    const CommutationReport rep = span_commutation_ok(S, 1);
    json data = to_json(rep);
    data["span_dim"] = S.span_dim;
    v.reasons.push_back({"commutation", mode, rep.holds, data});
    if (rep.holds && v.outcome != Outcome::accept) {
      v.outcome = Outcome::accept;
      v.rule = "commutation";
      v.witness["mode"] = mode;
    }
  }
  return v;
}

/// Border rank <= 4 iff the Strassen invariant of the mode-3 slices vanishes.
inline Verdict decide_333_br4(const Tensor3& T) {
  require_dims(T, {3, 3, 3}, "decide_333_br4");
  const SliceSpace S = slice_space(T, 3);
  const Scalar value = strassen_value(S.slices[0], S.slices[1], S.slices[2]);
  Verdict v;
  v.outcome = value.is_zero() ? Outcome::accept : Outcome::reject;
  v.rule = "strassen-invariant";
  v.reasons.push_back({"strassen-invariant-vanishes", 3, value.is_zero(), json{{"det_CR", to_json(value)}}});
  v.witness["det_CR"] = to_json(value);
  return v;
}

}  // namespace brank
