#pragma once

// Quadrics cut out by the 2x2 minors of a generic span element, the space
// S(T) of their symmetric matrices and its complement, the rank-l decision,
// and degree formulas for Segre and Veronese varieties.

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "brank/certify444.hpp"
#include "brank/linalg.hpp"
#include "brank/random.hpp"
#include "brank/strassen.hpp"
#include "brank/tensor.hpp"
#include "brank/verdict.hpp"

namespace brank {

struct MinorIndex {
  IndexSet alpha;  // two rows
  IndexSet beta;   // two columns
};

/// det [[a(i1,j1), b(i1,j2)], [a(i2,j1), b(i2,j2)]].
inline Scalar b_minor(const Matrix& A, const Matrix& B, const MinorIndex& idx) {
  if (A.rows() != B.rows() || A.cols() != B.cols()) throw DimensionError("b_minor needs equal shapes");
  if (idx.alpha.size() != 2 || idx.beta.size() != 2 || !idx.alpha.valid() || !idx.beta.valid() ||
      idx.alpha.members[1] >= A.rows() || idx.beta.members[1] >= A.cols())
    throw ArgumentError("minor index out of range");
  const auto i1 = idx.alpha.members[0], i2 = idx.alpha.members[1];
  const auto j1 = idx.beta.members[0], j2 = idx.beta.members[1];
  Scalar v = A(i1, j1) * B(i2, j2);
  v -= B(i1, j2) * A(i2, j1);
  return v;
}

/// Upper-triangle coordinates (p, q), p <= q, in lexicographic order.
inline std::vector<std::pair<std::size_t, std::size_t>> sym_coords(std::size_t l) {
  std::vector<std::pair<std::size_t, std::size_t>> c;
  for (std::size_t p = 0; p < l; ++p)
    for (std::size_t q = p; q < l; ++q) c.emplace_back(p, q);
  return c;
}

inline Matrix symmetric_from_coords(const Vector& v, std::size_t l) {
  Matrix S(l, l);
  const auto coords = sym_coords(l);
  for (std::size_t t = 0; t < coords.size(); ++t) {
    S(coords[t].first, coords[t].second) = v[t];
    S(coords[t].second, coords[t].first) = v[t];
  }
  return S;
}

struct QuadricSpace {
  std::size_t l = 0;
  std::vector<std::pair<MinorIndex, Matrix>> quadrics;  // S(alpha, beta), z^T S z = T(z)[alpha, beta]
  Matrix coeff;                                         // C(T): rows (alpha, beta), columns (p <= q)
  std::vector<Matrix> basis_of_span;
  std::vector<Matrix> perp_basis;  // w.r.t. <A, B> = tr(A B^T)

  std::size_t dim_span() const { return basis_of_span.size(); }
};

/// Builds every S(alpha, beta) with off-diagonal entries halved so that the
/// quadratic form is reproduced, and C(T) with entries b(T_p,T_q) + b(T_q,T_p)
/// (not halved; its diagonal columns are 2 b(T_p,T_p)). Column scaling leaves
/// rank C(T) = dim S(T).
inline QuadricSpace quadric_space(std::span<const Matrix> slices) {
  if (slices.size() < 2) throw ArgumentError("quadric_space needs at least two slices");
  const std::size_t m = slices[0].rows(), n = slices[0].cols();
  for (const auto& T : slices)
    if (T.rows() != m || T.cols() != n) throw DimensionError("slice shapes differ");
  QuadricSpace Q;
  Q.l = slices.size();
  const auto coords = sym_coords(Q.l);
  const auto as = subsets(m, 2), bs = subsets(n, 2);
  Q.coeff = Matrix(as.size() * bs.size(), coords.size());
  std::size_t row = 0;
  for (const auto& a : as)
    for (const auto& b : bs) {
      const MinorIndex idx{a, b};
      Matrix S(Q.l, Q.l);
      for (std::size_t t = 0; t < coords.size(); ++t) {
        const auto [p, q] = coords[t];
        Scalar c = b_minor(slices[p], slices[q], idx);
        if (p != q) c += b_minor(slices[q], slices[p], idx);
        else c += c;
        Q.coeff(row, t) = c;
        S(p, q) = c / Scalar(2);
        S(q, p) = S(p, q);
      }
      Q.quadrics.emplace_back(idx, std::move(S));
      ++row;
    }
  // Rows of C(T) are twice the upper-triangle coordinates of S(alpha, beta).
  std::vector<std::size_t> piv;
  const Matrix R = rref(Q.coeff, &piv);
  for (std::size_t r = 0; r < piv.size(); ++r) Q.basis_of_span.push_back(symmetric_from_coords(R.row(r), Q.l));
  // <S, B> = sum_p S_pp B_pp + 2 sum_{p<q} S_pq B_pq.
  Matrix pairing = Q.coeff;
  for (std::size_t r = 0; r < pairing.rows(); ++r)
    for (std::size_t t = 0; t < coords.size(); ++t)
      if (coords[t].first == coords[t].second) pairing(r, t) /= Scalar(2);
  for (const auto& v : nullspace(pairing)) Q.perp_basis.push_back(symmetric_from_coords(v, Q.l));
  return Q;
}

/// rank C(T) <= binom(l+1, 2) - r; requires the mode-3 slices to be independent.
inline bool rank_bound_check(const Tensor3& T, std::size_t r) {
  const SliceSpace S = slice_space(T, 3);
  if (S.span_dim != T.l())
    throw PreconditionError("rank_bound_check needs dim of the mode-3 span equal to l = " + std::to_string(T.l()));
  const std::size_t full = binomial(T.l() + 1, 2);
  if (r > full) return false;
  return rank(quadric_space(S.slices).coeff) <= full - r;
}

/// Coefficients c_0..c_n (c_n = 1) of det(x I - M), by Faddeev-LeVerrier.
inline Vector characteristic_polynomial(const Matrix& M) {
  detail::require_square(M, "characteristic_polynomial");
  const std::size_t n = M.rows();
  Vector c(n + 1);
  c[n] = 1;
  Matrix Mk(n, n);  // M_k, starting from M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix next = M * Mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    Mk = std::move(next);
    c[n - k] = -(M * Mk).trace() / Scalar(static_cast<long>(k));
  }
  return c;
}

/// Resultant of f and g (coefficients low to high) via the Sylvester determinant.
inline Scalar resultant(const Vector& f, const Vector& g) {
  if (f.size() < 2 || g.size() < 2) throw ArgumentError("resultant needs positive-degree polynomials");
  const std::size_t df = f.size() - 1, dg = g.size() - 1, N = df + dg;
  Matrix S(N, N);
  for (std::size_t r = 0; r < dg; ++r)
    for (std::size_t t = 0; t <= df; ++t) S(r, r + t) = f[df - t];
  for (std::size_t r = 0; r < df; ++r)
    for (std::size_t t = 0; t <= dg; ++t) S(dg + r, r + t) = g[dg - t];
  return det(S);
}

/// Nonzero iff the characteristic polynomial of M has distinct roots.
inline Scalar eigenvalue_discriminant(const Matrix& M) {
  const Vector p = characteristic_polynomial(M);
  if (p.size() == 2) return 1;
  Vector dp(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) dp[k - 1] = p[k] * Scalar(static_cast<long>(k));
  return resultant(p, dp);
}

struct RankLOptions {
  std::size_t trials = 20;
  std::uint64_t seed = 0;
  long bound = 5;
};

/// Rank exactly l when dim T_3 = l and dim S(T)^perp = l: the complement must
/// contain an invertible element, satisfy the commutation condition, and
/// contain A, B with A adj(B) having l distinct eigenvalues.
inline Verdict decide_rank_l(const Tensor3& T, const RankLOptions& opt = {}) {
  Verdict v;
  const std::size_t l = T.l();
  const SliceSpace S3 = slice_space(T, 3);
  v.reasons.push_back({"slice-span-dim", 3, S3.span_dim == l, json{{"span_dim", S3.span_dim}, {"l", l}}});
  if (S3.span_dim != l || l < 2) {
    v.outcome = Outcome::not_applicable;
    v.rule = "slice-span-dim";
    return v;
  }
  const QuadricSpace Q = quadric_space(S3.slices);
  const std::size_t perp = Q.perp_basis.size();
  v.reasons.push_back({"perp-dim", 3, perp == l, json{{"dim_S", Q.dim_span()}, {"dim_perp", perp}, {"l", l}}});
  if (perp != l) {
    v.outcome = Outcome::not_applicable;
    v.rule = "perp-dim";
    return v;
  }
  const SliceSpace U{0, Q.perp_basis, l};
  v.witness["perp_basis"] = json::array();
  for (const auto& B : Q.perp_basis) v.witness["perp_basis"].push_back(to_json(B));

  const auto inv = find_invertible(U, static_cast<long>(l));
  v.reasons.push_back({"perp-invertible", 0, inv.has_value(), inv ? json{{"coeffs", to_json(*inv)}} : json::object()});
  if (!inv) {
    v.outcome = Outcome::reject;
    v.rule = "perp-invertible";
    return v;
  }
  v.witness["invertible"] = to_json(*inv);

  const CommutationReport comm = span_commutation_ok(U, 1);
  v.reasons.push_back({"perp-commutation", 0, comm.holds, to_json(comm)});
  if (!comm.holds) {
    v.outcome = Outcome::reject;
    v.rule = "perp-commutation";
    return v;
  }

  Rng rng(opt.seed);
  for (std::size_t t = 0; t < opt.trials; ++t) {
    const Vector a = rng.vector(l, opt.bound), b = rng.vector(l, opt.bound);
    const Matrix A = combine(Q.perp_basis, a), B = combine(Q.perp_basis, b);
    const Scalar disc = eigenvalue_discriminant(A * adjugate(B));
    if (disc.is_zero()) continue;
    json w{{"trial", t}, {"a", to_json(a)}, {"b", to_json(b)}, {"discriminant", to_json(disc)}};
    v.reasons.push_back({"distinct-eigenvalues", 0, true, w});
    v.witness["distinct_eigenvalues"] = w;
    v.outcome = Outcome::accept;
    v.rule = "rank-l";
    return v;
  }
  v.reasons.push_back({"distinct-eigenvalues", 0, false, json{{"trials", opt.trials}, {"seed", opt.seed}}});
  v.outcome = Outcome::no_witness;
  v.rule = "distinct-eigenvalues";
  return v;
}

/// Degree of the Segre embedding of P^{m-1} x P^{n-1}.
inline mpz_class segre_degree(std::size_t m, std::size_t n) {
  if (m < 1 || n < 1) throw ArgumentError("segre_degree needs m, n >= 1");
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), m + n - 2, m - 1);
  return r;
}

/// prod_{j=0}^{m-2} binom(m+j, m-1-j) / binom(2j+1, j), checked to be an integer.
inline mpz_class veronese_degree(std::size_t m) {
  if (m < 2) throw ArgumentError("veronese_degree needs m >= 2");
  mpq_class prod = 1;
  for (std::size_t j = 0; j + 2 <= m; ++j) {
    mpz_class num, den;
    mpz_bin_uiui(num.get_mpz_t(), m + j, m - 1 - j);
    mpz_bin_uiui(den.get_mpz_t(), 2 * j + 1, j);
    prod *= mpq_class(num, den);
    prod.canonicalize();
  }
  if (prod.get_den() != 1 || prod <= 0) throw std::logic_error("Veronese degree product is not a positive integer");
  return prod.get_num();
}

}  // namespace brank
