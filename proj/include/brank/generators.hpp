#pragma once

// Seeded test tensors. "Generic" means: random integers, resampled until the
// named degeneracy predicates of each family fail to hold.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "brank/linalg.hpp"
#include "brank/random.hpp"
#include "brank/tensor.hpp"

namespace brank {

using RankOneTerm = std::array<Vector, 3>;

struct WitnessedTensor {
  Tensor3 tensor;
  std::vector<RankOneTerm> factors;
  std::size_t claimed_rank_bound = 0;
};

inline Tensor3 from_factors(Dims d, const std::vector<RankOneTerm>& factors) {
  Tensor3 T(d);
  for (const auto& f : factors) T.add_rank_one(f[0], f[1], f[2]);
  return T;
}

/// Sum of r rank-one terms with entries in {-bound..bound}, each vector nonzero.
inline WitnessedTensor random_rank_r(std::size_t m, std::size_t n, std::size_t l, std::size_t r, std::uint64_t seed,
                                     long bound) {
  if (r < 1 || bound < 1) throw ArgumentError("random_rank_r needs r >= 1 and bound >= 1");
  Rng rng(seed);
  WitnessedTensor w;
  for (std::size_t t = 0; t < r; ++t)
    w.factors.push_back({rng.nonzero_vector(m, bound), rng.nonzero_vector(n, bound), rng.nonzero_vector(l, bound)});
  w.tensor = from_factors({m, n, l}, w.factors);
  w.claimed_rank_bound = r;
  return w;
}

inline Tensor3 generic_tensor(std::size_t m, std::size_t n, std::size_t l, std::uint64_t seed, long bound) {
  if (bound < 1) throw ArgumentError("bound must be positive");
  Rng rng(seed);
  return Tensor3::from_entries({m, n, l}, rng.vector(m * n * l, bound));
}

/// Sum of e_i x e_i x e_i.
inline Tensor3 diagonal_tensor(std::size_t n) {
  Tensor3 T(n, n, n);
  for (std::size_t i = 0; i < n; ++i) T(i, i, i) = 1;
  return T;
}

/// Degeneracy predicates of the 4x4x4 family whose mode-3 slices vanish off
/// the first row and column. With B_i the transposed mode-1 slices, generic
/// means: det B_1 != 0; for A_i = B_1^{-1} B_i = a_i e_1^T (i = 2..4) every
/// e_1^T a_i != 0 and a_2, a_3, a_4 are not collinear; the mode-3 slices are
/// independent and have no common left or right kernel.
inline bool salmon_is_generic(const Tensor3& T) {
  std::vector<Matrix> B;
  for (std::size_t i = 0; i < 4; ++i) B.push_back(slice(T, 1, i).transpose());
  if (det(B[0]).is_zero()) return false;
  const Matrix B1inv = inverse(B[0]);
  Matrix a(4, 3);
  for (std::size_t i = 1; i < 4; ++i) {
    const Matrix Ai = B1inv * B[i];
    if (Ai(0, 0).is_zero()) return false;
    for (std::size_t r = 0; r < 4; ++r) a(r, i - 1) = Ai(r, 0);
  }
  if (rank(a) < 2) return false;
  const SliceSpace S = slice_space(T, 3);
  return S.span_dim == 4 && common_left_kernel(S).empty() && common_right_kernel(S).empty();
}

/// 4x4x4 tensor whose mode-3 slices have first row (a,b,c,d), first column
/// (a,e,f,g) and zeros elsewhere, with nonzero parameters in {-bound..bound}.
inline Tensor3 salmon_counterexample(std::uint64_t seed, long bound) {
  if (bound < 1) throw ArgumentError("bound must be positive");
  Rng rng(seed);
  for (;;) {
    Tensor3 T(4, 4, 4);
    for (std::size_t k = 0; k < 4; ++k) {
      for (std::size_t j = 0; j < 4; ++j) T(0, j, k) = rng.nonzero(bound);
      for (std::size_t i = 1; i < 4; ++i) T(i, 0, k) = rng.nonzero(bound);
    }
    if (salmon_is_generic(T)) return T;
  }
}

/// 3x3x4 tensor whose mode-3 slices are [[a,b,0],[c,d,0],[0,0,e]], resampled
/// until the four slices are linearly independent.
inline Tensor3 block_diag_334(std::uint64_t seed, long bound) {
  if (bound < 1) throw ArgumentError("bound must be positive");
  Rng rng(seed);
  for (;;) {
    Tensor3 T(3, 3, 4);
    for (std::size_t k = 0; k < 4; ++k) {
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) T(i, j, k) = rng.symmetric(bound);
      T(2, 2, k) = rng.symmetric(bound);
    }
    if (slice_space(T, 3).span_dim == 4) return T;
  }
}

inline Tensor3 symmetric_slices_333(std::uint64_t seed, long bound) {
  if (bound < 1) throw ArgumentError("bound must be positive");
  Rng rng(seed);
  Tensor3 T(3, 3, 3);
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i; j < 3; ++j) {
        T(i, j, k) = rng.symmetric(bound);
        T(j, i, k) = T(i, j, k);
      }
  return T;
}

/// Tensor whose k-th mode-3 slice is u_k v_k^T.
inline WitnessedTensor rank_one_slices(const std::vector<Vector>& us, const std::vector<Vector>& vs) {
  if (us.empty() || us.size() != vs.size()) throw ArgumentError("need equally many nonempty u and v vectors");
  const std::size_t l = us.size();
  WitnessedTensor w;
  for (std::size_t k = 0; k < l; ++k) {
    Vector e(l);
    e[k] = 1;
    w.factors.push_back({us[k], vs[k], e});
  }
  w.tensor = from_factors({us[0].size(), vs[0].size(), l}, w.factors);
  w.claimed_rank_bound = l;
  return w;
}

/// l <= m, n rank-one slices u_k v_k^T with independent u's and independent v's.
inline WitnessedTensor independent_rank_one_slices(std::size_t m, std::size_t n, std::size_t l, std::uint64_t seed,
                                                   long bound) {
  if (l < 2 || l > m || l > n) throw ArgumentError("need 2 <= l <= m, n");
  Rng rng(seed);
  for (;;) {
    std::vector<Vector> us, vs;
    Matrix U(l, m), V(l, n);
    for (std::size_t k = 0; k < l; ++k) {
      us.push_back(rng.vector(m, bound));
      vs.push_back(rng.vector(n, bound));
      for (std::size_t a = 0; a < m; ++a) U(k, a) = us[k][a];
      for (std::size_t a = 0; a < n; ++a) V(k, a) = vs[k][a];
    }
    if (rank(U) == l && rank(V) == l) return rank_one_slices(us, vs);
  }
}

/// m = n = l - 1 rank-one slices u_k v_k^T where any l - 1 of the u's, and
/// any l - 1 of the v's, are linearly independent.
inline WitnessedTensor spread_rank_one_slices(std::size_t l, std::uint64_t seed, long bound) {
  if (l < 4) throw ArgumentError("need l >= 4");
  const std::size_t m = l - 1;
  Rng rng(seed);
  auto spread = [&](const std::vector<Vector>& vecs) {
    for (std::size_t drop = 0; drop < l; ++drop) {
      Matrix M(m, m);
      for (std::size_t k = 0, r = 0; k < l; ++k) {
        if (k == drop) continue;
        for (std::size_t a = 0; a < m; ++a) M(r, a) = vecs[k][a];
        ++r;
      }
      if (det(M).is_zero()) return false;
    }
    return true;
  };
  for (;;) {
    std::vector<Vector> us, vs;
    for (std::size_t k = 0; k < l; ++k) {
      us.push_back(rng.vector(m, bound));
      vs.push_back(rng.vector(m, bound));
    }
    if (spread(us) && spread(vs)) return rank_one_slices(us, vs);
  }
}

/// u_k = v_k = e_k for k < l, and u_l = v_l = all-ones, in dimension l - 1.
inline WitnessedTensor unit_and_ones_slices(std::size_t l) {
  if (l < 4) throw ArgumentError("need l >= 4");
  std::vector<Vector> us;
  for (std::size_t k = 0; k + 1 < l; ++k) {
    Vector e(l - 1);
    e[k] = 1;
    us.push_back(e);
  }
  us.push_back(Vector(l - 1, Scalar(1)));
  return rank_one_slices(us, us);
}

/// e_k e_k^T slices, k = 1..l, in an m x n x l tensor.
inline WitnessedTensor unit_rank_one_slices(std::size_t m, std::size_t n, std::size_t l) {
  if (l > m || l > n) throw ArgumentError("need l <= m, n");
  std::vector<Vector> us, vs;
  for (std::size_t k = 0; k < l; ++k) {
    Vector u(m), v(n);
    u[k] = 1;
    v[k] = 1;
    us.push_back(u);
    vs.push_back(v);
  }
  return rank_one_slices(us, vs);
}

}  // namespace brank
