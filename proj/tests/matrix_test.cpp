#include <gtest/gtest.h>

#include <random>

#include "quon/group_algebra.hpp"
#include "quon/matrix.hpp"

namespace quon {
namespace {

Polynomial P(const char* s) { return parse_polynomial(s); }

/// Laplace expansion along the first row: independent of elimination.
Integer cofactor_det(const Matrix<Integer>& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  Integer total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    Matrix<Integer> minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t k = 0, kk = 0; k < n; ++k)
        if (k != c) minor(r - 1, kk++) = a(r, k);
    const Integer term = a(0, c) * cofactor_det(minor);
    total += (c % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

TEST(BareissTest, IdentityAndTwoByTwo) {
  EXPECT_EQ(bareiss_determinant(Matrix<Polynomial>::identity(5, Polynomial::one()), Polynomial::one()),
            Polynomial::one());
  Matrix<Polynomial> m(2, 2);
  m(0, 0) = Polynomial::one();
  m(0, 1) = Polynomial::q();
  m(1, 0) = Polynomial::q();
  m(1, 1) = Polynomial::one();
  EXPECT_EQ(bareiss_determinant(m, Polynomial::one()), P("1 - q^2"));
}

TEST(BareissTest, ZeroPivotNeedsRowSwap) {
  Matrix<Integer> a(3, 3, 0);
  a(0, 1) = 1;
  a(1, 0) = 1;
  a(2, 2) = 5;
  EXPECT_EQ(bareiss_determinant(a, Integer(1)), Integer(-5));
  Matrix<Integer> singular(2, 2, 1);
  EXPECT_EQ(bareiss_determinant(singular, Integer(1)), Integer(0));
}

TEST(BareissTest, AgreesWithCofactorExpansion) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 6;
    Matrix<Integer> a(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) a(r, c) = entry(rng);
    ASSERT_EQ(bareiss_determinant(a, Integer(1)), cofactor_det(a));
    const auto minors = bareiss_leading_minors(a, Integer(1));
    for (std::size_t k = 1; k <= n; ++k) ASSERT_EQ(minors[k - 1], cofactor_det(a.leading_block(k)));
  }
}

TEST(BareissTest, LeadingMinorsOfRationalMatrix) {
  Matrix<Rational> a(2, 2);
  a(0, 0) = 1;
  a(0, 1) = Rational(1, 2);
  a(1, 0) = Rational(1, 2);
  a(1, 1) = 1;
  EXPECT_EQ(bareiss_leading_minors(a, Rational(1)), (std::vector<Rational>{1, Rational(3, 4)}));
}

TEST(BareissTest, RationalFunctionDeterminantClearsDenominators) {
  Matrix<RationalFunction> a(2, 2);
  a(0, 0) = rf_normalize(P("1"), P("1 - q"));
  a(0, 1) = RationalFunction(P("q"));
  a(1, 0) = rf_normalize(P("1"), P("1 + q"));
  a(1, 1) = RationalFunction(1);
  // 1/(1-q) - q/(1+q)
  EXPECT_EQ(determinant(a), rf_normalize(P("1 + q^2"), P("1 - q^2")));
  EXPECT_THROW(determinant(Matrix<RationalFunction>(2, 3)), SizeMismatch);
}

}  // namespace
}  // namespace quon
