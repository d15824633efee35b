#include <gtest/gtest.h>

#include "brank/random.hpp"
#include "brank/tensor.hpp"

using namespace brank;

namespace {

Tensor3 random_tensor(Rng& rng, Dims d, long bound = 3) {
  return Tensor3::from_entries(d, rng.vector(d[0] * d[1] * d[2], bound));
}

Matrix random_invertible(Rng& rng, std::size_t n) {
  for (;;) {
    Matrix P = rng.matrix(n, n, 3);
    if (!det(P).is_zero()) return P;
  }
}

Tensor3 diagonal_tensor(std::size_t n) {
  Tensor3 T(n, n, n);
  for (std::size_t i = 0; i < n; ++i) T(i, i, i) = 1;
  return T;
}

}  // namespace

TEST(Slice, RankOneSlices) {
  const Vector u{1, 2, -1}, v{0, 3}, w{2, 5, 1, -4};
  const Tensor3 T = Tensor3::rank_one(u, v, w);
  for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(slice(T, 3, k), w[k] * outer(u, v));
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(slice(T, 1, i), u[i] * outer(v, w));
  for (std::size_t j = 0; j < 2; ++j) EXPECT_EQ(slice(T, 2, j), v[j] * outer(u, w));
  EXPECT_THROW(slice(T, 3, 4), ArgumentError);
  EXPECT_THROW(slice(T, 0, 0), ArgumentError);
  for (int p = 1; p <= 3; ++p) EXPECT_LE(slice_space(T, p).span_dim, 1u);
}

TEST(Slice, ReconstructFromMode3) {
  Rng rng(1);
  const Tensor3 T = random_tensor(rng, {3, 2, 4});
  const SliceSpace S = slice_space(T, 3);
  EXPECT_EQ(Tensor3::from_slices(S.slices), T);
  EXPECT_EQ(slice_space(Tensor3(3, 3, 3), 2).span_dim, 0u);
}

TEST(SliceSpace, DiagonalHasFullSpans) {
  const Tensor3 D = diagonal_tensor(3);
  for (int p = 1; p <= 3; ++p) EXPECT_EQ(slice_space(D, p).span_dim, 3u);
}

TEST(ChangeBasis, IdentityAndRankOne) {
  Rng rng(2);
  const Tensor3 T = random_tensor(rng, {3, 4, 2});
  EXPECT_EQ(change_basis(T, Matrix::identity(3), Matrix::identity(4), Matrix::identity(2)), T);
  const Vector u = rng.vector(3, 3), v = rng.vector(4, 3), w = rng.vector(2, 3);
  const Matrix P = rng.matrix(3, 3, 3), Q = rng.matrix(4, 4, 3), R = rng.matrix(2, 2, 3);
  EXPECT_EQ(change_basis(Tensor3::rank_one(u, v, w), P, Q, R), Tensor3::rank_one(P * u, Q * v, R * w));
  EXPECT_THROW(change_basis(T, Matrix::identity(4), Matrix::identity(4), Matrix::identity(2)), DimensionError);
}

TEST(ChangeBasis, SliceSpaceTransformsByCongruence) {
  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    const Tensor3 T = random_tensor(rng, {3, 3, 4}, 2);
    const Matrix P = random_invertible(rng, 3), Q = random_invertible(rng, 3), R = random_invertible(rng, 4);
    const Tensor3 U = change_basis(T, P, Q, R);
    // P T_3 Q^T and T_3(U) span the same space: compare ranks of the union.
    std::vector<Matrix> both = slice_space(U, 3).slices;
    for (const auto& A : slice_space(T, 3).slices) both.push_back(P * A * Q.transpose());
    const auto s = slice_space(U, 3).span_dim;
    EXPECT_EQ(s, slice_space(T, 3).span_dim);
    EXPECT_EQ(span_rank(both), s);
    for (int p = 1; p <= 3; ++p) EXPECT_EQ(slice_space(U, p).span_dim, slice_space(T, p).span_dim);
  }
}

TEST(PermuteModes, IdentityTranspositionRoundTrip) {
  Rng rng(4);
  const Tensor3 T = random_tensor(rng, {2, 3, 4});
  EXPECT_EQ(permute_modes(T, {1, 2, 3}), T);
  const Tensor3 S = permute_modes(T, {2, 1, 3});
  EXPECT_EQ(S.dims(), (Dims{3, 2, 4}));
  for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(slice(S, 3, k), slice(T, 3, k).transpose());
  const std::vector<ModePermutation> perms{{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
  for (const auto& perm : perms) {
    const Tensor3 P = permute_modes(T, perm);
    EXPECT_EQ(permute_modes(P, inverse_permutation(perm)), T);
    for (int p = 1; p <= 3; ++p) EXPECT_EQ(slice_space(P, perm[p - 1]).span_dim, slice_space(T, p).span_dim);
  }
  EXPECT_THROW(permute_modes(T, {1, 1, 2}), ArgumentError);
}

TEST(CommonKernel, ZeroLastRow) {
  Rng rng(5);
  Tensor3 T = random_tensor(rng, {4, 4, 3});
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t k = 0; k < 3; ++k) T(3, j, k) = 0;
  const auto left = common_left_kernel(slice_space(T, 3));
  ASSERT_EQ(left.size(), 1u);
  EXPECT_EQ(left[0], (Vector{0, 0, 0, 1}));
  EXPECT_TRUE(common_right_kernel(slice_space(T, 3)).empty());
  const Tensor3 G = random_tensor(rng, {4, 4, 4});
  EXPECT_TRUE(common_left_kernel(slice_space(G, 3)).empty());
}

TEST(Reduce334, EvidentRestriction) {
  Rng rng(6);
  Tensor3 T(4, 4, 4);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 4; ++k) T(i, j, k) = rng.symmetric(3);
  const auto red = reduce_to_334(T);
  ASSERT_TRUE(red.has_value());
  EXPECT_EQ(red->first_mode, 1);
  EXPECT_EQ(red->second_mode, 2);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(red->tensor(i, j, k), T(i, j, k));
  EXPECT_EQ(expand_from_334(*red), T);
}

TEST(Reduce334, FullSpansGiveNothing) {
  EXPECT_FALSE(reduce_to_334(diagonal_tensor(4)).has_value());
  EXPECT_THROW(reduce_to_334(Tensor3(3, 3, 4)), DimensionError);
}

TEST(Reduce334, EmbeddedRoundTrip) {
  Rng rng(7);
  for (int t = 0; t < 20; ++t) {
    Tensor3 E(4, 4, 4);
    const Tensor3 small = random_tensor(rng, {3, 3, 4});
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 4; ++k) E(i, j, k) = small(i, j, k);
    const ModePermutation perms[] = {{1, 2, 3}, {1, 3, 2}, {3, 1, 2}};
    const Tensor3 T = change_basis(permute_modes(E, perms[t % 3]), random_invertible(rng, 4),
                                   random_invertible(rng, 4), random_invertible(rng, 4));
    const auto red = reduce_to_334(T);
    ASSERT_TRUE(red.has_value());
    for (const auto& B : red->basis) EXPECT_FALSE(det(B).is_zero());
    EXPECT_EQ(expand_from_334(*red), T);
  }
}
