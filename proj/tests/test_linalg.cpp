#include <gtest/gtest.h>

#include "brank/linalg.hpp"
#include "brank/random.hpp"
#include "oracles.hpp"

using namespace brank;

namespace {

Matrix random_rank(Rng& rng, std::size_t rows, std::size_t cols, std::size_t r) {
  Matrix M(rows, cols);
  for (std::size_t t = 0; t < r; ++t) M += outer(rng.vector(rows, 3), rng.vector(cols, 3));
  return M;
}

Scalar gi(long re, long im) { return Scalar(mpq_class(re), mpq_class(im)); }

}  // namespace

TEST(Scalar, ParseAndCanonicalForm) {
  EXPECT_EQ(parse_rational("6/4"), mpq_class(3, 2));
  EXPECT_EQ(parse_rational("-7"), mpq_class(-7));
  EXPECT_EQ(rational_string(parse_rational("0/5")), "0/1");
  EXPECT_EQ(rational_string(parse_rational("-6/4")), "-3/2");
  EXPECT_THROW(parse_rational("4/-2"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/"), std::invalid_argument);
}

TEST(Scalar, FieldAxioms) {
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    Scalar a(mpq_class(rng.symmetric(9), 1 + rng.below(5)), mpq_class(rng.symmetric(9), 1 + rng.below(5)));
    Scalar b(mpq_class(rng.symmetric(9), 1 + rng.below(5)), mpq_class(rng.symmetric(9)));
    Scalar c(mpq_class(rng.symmetric(9)), mpq_class(rng.symmetric(9), 1 + rng.below(5)));
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.inverse(), Scalar(1));
      EXPECT_EQ((b / a) * a, b);
    }
    Scalar acc = c;
    acc.add_product(a, b);
    EXPECT_EQ(acc, c + a * b);
  }
  EXPECT_EQ(gi(0, 1) * gi(0, 1), Scalar(-1));
  EXPECT_THROW(Scalar(0).inverse(), std::domain_error);
}

TEST(Det, SmallCases) {
  EXPECT_EQ(det(Matrix::identity(3)), Scalar(1));
  EXPECT_EQ(det(Matrix{{1, 2}, {3, 4}}), Scalar(-2));
  EXPECT_EQ(det(Matrix(0, 0)), Scalar(1));
  EXPECT_THROW(det(Matrix(2, 3)), DimensionError);
}

TEST(Det, AgreesWithCofactorExpansion) {
  Rng rng(1);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng.below(5);
    Matrix A = rng.matrix(n, n, 3);
    if (t % 3 == 0) A(rng.below(n), rng.below(n)) = gi(rng.symmetric(3), rng.symmetric(3));
    EXPECT_EQ(det(A), oracle::cofactor_det(A)) << A;
  }
}

TEST(Rank, TrivialCases) {
  EXPECT_EQ(rank(Matrix(3, 4)), 0u);
  EXPECT_EQ(rank(outer({1, 2, 3}, {0, 5})), 1u);
  EXPECT_EQ(rank(Matrix::identity(4)), 4u);
}

TEST(Rank, AgreesWithMinorEnumeration) {
  Rng rng(2);
  for (int t = 0; t < 500; ++t) {
    const std::size_t rows = 1 + rng.below(4), cols = 1 + rng.below(5);
    const Matrix A = t % 2 ? rng.matrix(rows, cols, 2) : random_rank(rng, rows, cols, rng.below(4));
    EXPECT_EQ(rank(A), oracle::minor_rank(A)) << A;
  }
}

TEST(Adjugate, DefiningIdentity) {
  EXPECT_EQ(adjugate(Matrix::identity(3)), Matrix::identity(3));
  EXPECT_EQ(adjugate(Matrix{{7}}), (Matrix{{1}}));
  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng.below(5);
    const Matrix A = rng.matrix(n, n, 3);
    const Matrix adj = adjugate(A);
    const Matrix d = det(A) * Matrix::identity(n);
    EXPECT_EQ(A * adj, d);
    EXPECT_EQ(adj * A, d);
  }
}

TEST(Adjugate, VanishesBelowCorank1) {
  Rng rng(4);
  for (int t = 0; t < 50; ++t) {
    const Matrix A = random_rank(rng, 4, 4, rng.below(3));
    EXPECT_TRUE(adjugate(A).is_zero());
  }
}

TEST(Compound, IdentityAndOrderTwo) {
  EXPECT_EQ(compound(Matrix::identity(4), 2), Matrix::identity(6));
  EXPECT_EQ(compound(Matrix{{1, 2}, {3, 4}}, 2), (Matrix{{-2}}));
  EXPECT_THROW(compound(Matrix::identity(3), 0), ArgumentError);
  EXPECT_THROW(compound(Matrix(2, 3), 3), ArgumentError);
  EXPECT_THROW(signed_compound(Matrix::identity(3), 3), ArgumentError);
}

TEST(Compound, RowOrderIsLexicographic) {
  const Matrix A{{1, 2, 3}, {4, 5, 6}, {7, 8, 10}};
  const Matrix C = compound(A, 2);
  // rows {1,2},{1,3},{2,3}
  EXPECT_EQ(C(0, 0), Scalar(1 * 5 - 2 * 4));
  EXPECT_EQ(C(1, 2), Scalar(2 * 10 - 3 * 8));
  EXPECT_EQ(C(2, 1), Scalar(4 * 10 - 6 * 7));
}

TEST(Compound, CauchyBinet) {
  Rng rng(5);
  for (int t = 0; t < 60; ++t) {
    const Matrix A = rng.matrix(4, 4, 3), B = rng.matrix(4, 4, 3);
    for (std::size_t p = 1; p <= 3; ++p) EXPECT_EQ(compound(A * B, p), compound(A, p) * compound(B, p));
  }
}

TEST(SignedCompound, LaplaceAndInverse) {
  Rng rng(6);
  for (int t = 0; t < 60; ++t) {
    const Matrix A3 = rng.matrix(3, 3, 3);
    EXPECT_EQ(signed_compound(A3, 1).transpose(), adjugate(A3));
    const Matrix A = rng.matrix(4, 4, 3);
    const Scalar d = det(A);
    for (std::size_t p = 1; p <= 3; ++p) {
      const Matrix C = compound(A, p), S = signed_compound(A, p);
      const Matrix dI = d * Matrix::identity(C.rows());
      EXPECT_EQ(C * S.transpose(), dI);
      EXPECT_EQ(S.transpose() * C, dI);
      if (!d.is_zero()) {
        EXPECT_EQ(compound(inverse(A), p), S.transpose() * d.inverse());
      }
    }
  }
}

TEST(Nullspace, Basics) {
  EXPECT_TRUE(nullspace(Matrix::identity(3)).empty());
  EXPECT_EQ(nullspace(Matrix(2, 3)).size(), 3u);
  Rng rng(7);
  for (int t = 0; t < 100; ++t) {
    const std::size_t rows = 1 + rng.below(5), cols = 1 + rng.below(6);
    const Matrix A = random_rank(rng, rows, cols, rng.below(std::min(rows, cols) + 1));
    const auto basis = nullspace(A);
    EXPECT_EQ(basis.size(), cols - rank(A));
    for (const auto& x : basis) EXPECT_TRUE(is_zero(A * x));
    if (!basis.empty()) {
      Matrix B(basis.size(), cols);
      for (std::size_t r = 0; r < basis.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c) B(r, c) = basis[r][c];
      EXPECT_EQ(rank(B), basis.size());
    }
  }
}

TEST(Inverse, RoundTripAndSingular) {
  Rng rng(8);
  for (int t = 0; t < 50; ++t) {
    const Matrix A = rng.matrix(4, 4, 3);
    if (det(A).is_zero()) {
      EXPECT_THROW(inverse(A), PreconditionError);
    } else {
      EXPECT_EQ(A * inverse(A), Matrix::identity(4));
    }
  }
}

TEST(CofactorNullvector, ForcedExample) {
  const Matrix A{{1, 0, 0}, {0, 1, 0}};
  const Vector x = cofactor_nullvector(A, IndexSet{2, {0, 1}}, IndexSet{3, {0, 1, 2}});
  EXPECT_EQ(x, (Vector{0, 0, 1}));
  EXPECT_THROW(cofactor_nullvector(A, IndexSet{2, {0}}, IndexSet{3, {0, 1}}), PreconditionError);
  EXPECT_THROW(cofactor_nullvector(A, IndexSet{2, {0, 1}}, IndexSet{3, {0, 1}}), ArgumentError);
}

TEST(CofactorNullvector, LiesInNullspaceAndDetectsRank) {
  Rng rng(9);
  for (int t = 0; t < 20; ++t) {
    const std::size_t k = 1 + rng.below(3);
    const Matrix A = random_rank(rng, 4, 6, k);
    const std::size_t r = rank(A);
    bool some_nonzero = false;
    for (const auto& alpha : subsets(4, k))
      for (const auto& beta : subsets(6, k + 1)) {
        const Vector x = cofactor_nullvector(A, alpha, beta);
        EXPECT_TRUE(is_zero(A * x));
        some_nonzero = some_nonzero || !is_zero(x);
      }
    EXPECT_EQ(some_nonzero, r == k);
  }
}

TEST(IndexSets, EnumerationAndComplement) {
  const auto s = subsets(4, 2);
  ASSERT_EQ(s.size(), 6u);
  EXPECT_EQ(s.front().members, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(s.back().members, (std::vector<std::size_t>{2, 3}));
  EXPECT_EQ(s[1].complement().members, (std::vector<std::size_t>{1, 3}));
  EXPECT_EQ(s[1].weight(), 4u);
  EXPECT_EQ(subsets(3, 0).size(), 1u);
  EXPECT_EQ(binomial(6, 3), 20u);
}

TEST(SpanRank, IndependentSubset) {
  const std::vector<Matrix> mats{Matrix::identity(2), Matrix{{2, 0}, {0, 2}}, Matrix{{0, 1}, {0, 0}}};
  EXPECT_EQ(span_rank(mats), 2u);
  EXPECT_EQ(independent_subset(mats), (std::vector<std::size_t>{0, 2}));
}
