#include <gtest/gtest.h>

#include <random>

#include "quon/rational_function.hpp"
#include "test_support.hpp"

namespace quon {
namespace {

Polynomial P(const char* s) { return parse_polynomial(s); }

TEST(RationalFunctionTest, NormalizeCancelsCommonFactor) {
  const auto f = rf_normalize(P("-1 + q^2"), P("-1 + q"));
  EXPECT_EQ(f.num(), P("1 + q"));
  EXPECT_EQ(f.den(), Polynomial::one());
}

TEST(RationalFunctionTest, ZeroIsZeroOverOne) {
  const auto f = rf_normalize(Polynomial(), P("1 - q"));
  EXPECT_TRUE(f.is_zero());
  EXPECT_EQ(f.den(), Polynomial::one());
}

TEST(RationalFunctionTest, SignLivesInTheNumerator) {
  // q/(1-q) and (-q)/(q-1) are the same element; the denominator lead is positive.
  const auto a = rf_normalize(P("q"), P("1 - q"));
  const auto b = rf_normalize(P("-q"), P("-1 + q"));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.num(), P("-q"));
  EXPECT_EQ(a.den(), P("-1 + q"));
  EXPECT_EQ(to_string(a), "-q/(-1 + q)");
}

TEST(RationalFunctionTest, ContentIsReduced) {
  const auto f = rf_normalize(P("2 + 4*q"), P("6 - 6*q^3"));
  EXPECT_EQ(f.num(), P("-1 - 2*q"));
  EXPECT_EQ(f.den(), P("-3 + 3*q^3"));
}

TEST(RationalFunctionTest, ZeroDenominatorThrows) {
  EXPECT_THROW(rf_normalize(P("1"), Polynomial()), DivisionByZero);
  EXPECT_THROW(RationalFunction().inverse(), DivisionByZero);
}

TEST(RationalFunctionTest, Eval) {
  EXPECT_EQ(rf_eval(RationalFunction(P("1 - q^2")), Rational(1, 2)), Rational(3, 4));
  EXPECT_THROW(rf_eval(rf_normalize(P("1"), P("1 - q")), Rational(1)), PoleError);
  EXPECT_EQ(rf_eval(RationalFunction(P("q^4 + q^5")), Rational(1, 2)), Rational(3, 32));
}

TEST(RationalFunctionTest, FieldOperations) {
  const auto a = rf_normalize(P("1"), P("1 - q"));
  const auto b = rf_normalize(P("1"), P("1 + q"));
  EXPECT_EQ(a + b, rf_normalize(P("2"), P("1 - q^2")));
  EXPECT_EQ(a * b, rf_normalize(P("1"), P("1 - q^2")));
  EXPECT_EQ(a / a, RationalFunction(1));
  EXPECT_EQ(a - a, RationalFunction());
}

TEST(RationalFunctionTest, NormalizeIsIdempotent) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = rf_normalize(testing::random_polynomial(rng, 8, 9), testing::random_nonzero_polynomial(rng, 8, 9));
    const auto g = rf_normalize(f.num(), f.den());
    ASSERT_EQ(f.num(), g.num());
    ASSERT_EQ(f.den(), g.den());
    ASSERT_TRUE(gcd(f.num(), f.den()).is_one() || f.is_zero());
    ASSERT_GT(f.den().leading(), 0);
  }
}

TEST(RationalFunctionTest, EvaluationIsMultiplicative) {
  std::mt19937 rng(12);
  const Rational x0(2, 7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = rf_normalize(testing::random_polynomial(rng, 6, 9), testing::random_nonzero_polynomial(rng, 6, 9));
    const auto g = rf_normalize(testing::random_polynomial(rng, 6, 9), testing::random_nonzero_polynomial(rng, 6, 9));
    if (f.den().eval(x0) == 0 || g.den().eval(x0) == 0) continue;
    ASSERT_EQ((f * g).eval(x0), f.eval(x0) * g.eval(x0));
    ASSERT_EQ((f + g).eval(x0), f.eval(x0) + g.eval(x0));
  }
}

TEST(RationalFunctionTest, RenderedStringsReparse) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = rf_normalize(testing::random_polynomial(rng, 6, 99), testing::random_nonzero_polynomial(rng, 6, 99));
    ASSERT_EQ(parse_rational_function(to_string(f)), f) << to_string(f);
  }
  EXPECT_THROW(parse_rational_function("(1 + q"), ParseError);
  EXPECT_THROW(parse_rational_function("1/(0)"), DivisionByZero);
}

}  // namespace
}  // namespace quon
