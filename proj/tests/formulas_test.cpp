#include <gtest/gtest.h>

#include "quon/formulas.hpp"

namespace quon {
namespace {

Polynomial P(const char* s) { return parse_polynomial(s); }

RationalFunction brute_det(int m, int n) {
  return det_bruteforce(rep_matrix(sum_q_cinv(m, static_cast<std::size_t>(n)), Multiset::range(n)));
}

/// prod_{i=1}^{n-1} (1 - q^(i^2+i))^((n-i) n! / (i^2+i)), the m = 1 closed form.
Polynomial single_color_det(std::size_t n) {
  unsigned long fact = 1;
  for (std::size_t i = 2; i <= n; ++i) fact *= i;
  Polynomial out = Polynomial::one();
  for (std::size_t i = 1; i < n; ++i)
    out *= (Polynomial::one() - Polynomial::monomial(1, i * i + i)).pow((n - i) * fact / (i * i + i));
  return out;
}

TEST(FormulasTest, DeterminantExamples) {
  EXPECT_EQ(det_closed_form(2, 1), P("1 - q^2"));
  EXPECT_EQ(brute_det(2, 1), RationalFunction(P("1 - q^2")));
  EXPECT_EQ(det_closed_form(1, 2), P("1 - q^2"));
  EXPECT_EQ(det_closed_form(3, 2), (Polynomial{1, 2} * Polynomial{1, -1}.pow(2)).pow(12) * P("1 - q^2").pow(9));
}

TEST(FormulasTest, FactorizationExponents) {
  const auto f = det_factorization(3, 2);
  EXPECT_EQ(f.color_exponent, 12u);
  ASSERT_EQ(f.perm_factors.size(), 1u);
  EXPECT_EQ(f.perm_factors[0].first, P("1 - q^2"));
  EXPECT_EQ(f.perm_factors[0].second, 9u);
  EXPECT_EQ(to_string(f), "(1 - 3*q^2 + 2*q^3)^12 * (1 - q^2)^9");
  EXPECT_THROW(det_factorization(0, 2), InvalidArgument);
  EXPECT_THROW(det_factorization(2, 0), InvalidArgument);
}

TEST(FormulasTest, ClosedFormAgreesWithBareissOracle) {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 1}, {3, 1}, {2, 2}, {3, 2}, {4, 1}})
    ASSERT_EQ(RationalFunction(det_closed_form(m, static_cast<std::size_t>(n))), brute_det(m, n))
        << "m=" << m << " n=" << n;
}

TEST(FormulasTest, UniformExponentFormDisagreesWithOracle) {
  // (1 - q^2)^2 != 1 - q^2
  EXPECT_EQ(det_uniform_exponent_form(2, 1), P("1 - q^2").pow(2));
  EXPECT_NE(RationalFunction(det_uniform_exponent_form(2, 1)), brute_det(2, 1));
}

TEST(FormulasTest, SingleColorCaseMatchesKnownProduct) {
  for (std::size_t n = 1; n <= 4; ++n) ASSERT_EQ(det_closed_form(1, n), single_color_det(n)) << "n=" << n;
}

TEST(FormulasTest, RootsAtIntervalEndpoints) {
  for (int m = 1; m <= 3; ++m)
    for (std::size_t n = 1; n <= 3; ++n) {
      const Polynomial d = det_closed_form(m, n);
      if (m >= 2 || n >= 2) ASSERT_EQ(d.eval(Rational(1)), 0);
      if (m >= 2) ASSERT_EQ(d.eval(make_rational(1, 1 - m)), 0);
      ASSERT_EQ(d.eval(Rational(0)), 1);
    }
}

TEST(FormulasTest, ColorFactorDeterminantPerPosition) {
  const RationalFunction q = RationalFunction::q();
  for (auto [m, n] : std::vector<std::pair<int, std::size_t>>{{2, 2}, {3, 2}}) {
    const std::size_t index = group_order(m, n) / static_cast<std::size_t>(m);
    for (std::size_t i = 1; i <= n; ++i) {
      const auto factor = embed_cyclic(cyclic_one_plus_sum(m, q), n, i);
      ASSERT_EQ(det_rep(factor, Multiset::range(static_cast<int>(n))), circulant_det_closed(m, q).pow(index));
    }
  }
}

TEST(FormulasTest, FactorSum) {
  const auto [p1, c1] = factor_sum(1, 3);
  EXPECT_EQ(c1, GroupAlgebraElement::identity(1, 3));
  const auto [p2, c2] = factor_sum(2, 2);
  const auto full = sum_q_cinv(2, 2);
  EXPECT_EQ(full.size(), 8u);
  EXPECT_EQ(ga_mul(p2, c2), full);
  EXPECT_EQ(c2, color_sum_product_form(2, 2));
  const auto [p3, c3] = factor_sum(3, 1);
  EXPECT_EQ(c3, embed_cyclic(cyclic_one_plus_sum(3, RationalFunction::q()), 1, 1));
  for (auto [m, n] : std::vector<std::pair<int, std::size_t>>{{2, 3}, {3, 2}}) {
    const auto [p, c] = factor_sum(m, n);
    ASSERT_EQ(ga_mul(p, c), sum_q_cinv(m, n));
    ASSERT_EQ(c, color_sum_product_form(m, n));
  }
}

TEST(FormulasTest, InverseSingleParticleIsRho) {
  for (int m = 1; m <= 4; ++m) EXPECT_EQ(inverse_closed_form(m, 1), rho(m, 1, 1));
}

TEST(FormulasTest, InverseTwoParticlesOneColor) {
  // (1 + q t)^-1 = (1 - q t) / (1 - q^2)
  GroupAlgebraElement expected = GroupAlgebraElement::identity(1, 2);
  expected.add_term(t_cycle(1, 1, 2), -RationalFunction::q());
  expected = RationalFunction(P("1 - q^2")).inverse() * expected;
  EXPECT_EQ(inverse_closed_form(1, 2), expected);
}

TEST(FormulasTest, VerifyInverse) {
  EXPECT_TRUE(verify_inverse(1, 2));
  EXPECT_TRUE(verify_inverse(2, 2));
  EXPECT_TRUE(verify_inverse(2, 3));
  EXPECT_TRUE(verify_inverse(3, 2));
  EXPECT_TRUE(verify_inverse(1, 4));
}

TEST(FormulasTest, ReversedOuterProductIsNotTheInverse) {
  const auto f = inverse_factors(1, 3);
  GroupAlgebraElement reversed = GroupAlgebraElement::identity(1, 3);
  for (std::size_t i = 1; i <= 2; ++i) reversed = reversed * f.gamma[i - 1] * f.epsilon[i - 1];
  EXPECT_NE(reversed * sum_q_cinv(1, 3), GroupAlgebraElement::identity(1, 3));
}

TEST(FormulasTest, CycleT) {
  // n -> n-1 -> ... -> k -> n in one-line notation
  EXPECT_EQ(t_cycle(1, 1, 3).sigma(), (std::vector<int>{3, 1, 2}));
  EXPECT_EQ(t_cycle(1, 2, 3).sigma(), (std::vector<int>{1, 3, 2}));
  EXPECT_TRUE(t_cycle(2, 3, 3).is_neutral());
}

TEST(FormulasTest, InverseFactorSupports) {
  const auto f = inverse_factors(3, 3);
  for (std::size_t k = 1; k <= 3; ++k)
    for (const auto& [g, c] : f.rho[k - 1].terms()) {
      ASSERT_TRUE(decompose(g).first.is_neutral());
      for (std::size_t i = 0; i < 3; ++i)
        if (i != k - 1) ASSERT_EQ(g.alpha()[i], 3);
    }
  for (const auto* list : {&f.gamma, &f.epsilon})
    for (const auto& x : *list)
      for (const auto& [g, c] : x.terms())
        for (int color : g.alpha()) ASSERT_EQ(color, 3);
}

}  // namespace
}  // namespace quon
