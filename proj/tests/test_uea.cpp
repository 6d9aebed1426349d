#include <gtest/gtest.h>

#include "sdrep/restriction.hpp"
#include "sdrep/uea.hpp"
#include "sdrep/verify.hpp"

using namespace sdrep;

namespace {

UEAExpression g(const Generator& x, long c = 1) { return UEAExpression::single(Rational(c), x); }
UEAExpression F(int i, int j) { return g(Generator::f(i, j)); }
UEAExpression P(int i) { return g(Generator::pj(i)); }

}  // namespace

TEST(Expression, RejectsRaisingAndCartan) {
  EXPECT_THROW(UEAExpression::single(Rational(1), Generator::e(1, 1)), std::invalid_argument);
  EXPECT_THROW(UEAExpression::single(Rational(1), Generator::h(1)), std::invalid_argument);
}

TEST(Expression, CanonicalFormMergesTerms) {
  const UEAExpression x = F(1, 1) * P(1) + F(1, 1) * P(1) - (F(1, 1) * P(1)).scaled(2);
  EXPECT_TRUE(x.is_zero());
  EXPECT_EQ(F(1, 1) + F(2, 2), F(2, 2) + F(1, 1));
  EXPECT_FALSE(F(1, 1) * F(2, 2) == F(2, 2) * F(1, 1));
}

TEST(Expression, RightmostFactorActsFirst) {
  const SemidirectModule mod = restrict_module(build_irrep(4, Weight({1, 0, 1})), Embedding::Phi);
  const SparseVector v = SparseVector::unit(mod.dim(), 0);
  const SparseVector direct = mod.base.apply(Generator::f(1, 1), mod.base.apply(Generator::pj(1), v));
  EXPECT_EQ((F(1, 1) * P(1)).apply(mod.base, v), direct);
  EXPECT_EQ((F(1, 1) * P(1)).as_matrix(mod.base), mod.base.act(Generator::f(1, 1)) * mod.base.act(Generator::pj(1)));
}

TEST(MuKs, Examples) {
  EXPECT_EQ(mu_ks(Weight({2, 1}), 1, 2), -5);
  for (int k = 1; k <= 3; ++k) EXPECT_EQ(mu_ks(Weight::zero(3), k, k), -1);
  for (const auto& mu : weight_grid(3, 3))
    for (int s = 1; s <= 3; ++s)
      for (int k = 1; k <= s; ++k) EXPECT_NE(mu_ks(mu, k, s), 0);
}

TEST(Decorated, Examples) {
  const Weight mu = Weight::zero(3);
  EXPECT_EQ(p_decorated(mu, 2, 1), P(1));
  for (int i = 1; i <= 3; ++i) EXPECT_EQ(f_decorated(mu, 3, i, i), F(i, i));
  EXPECT_EQ(f_decorated(mu, 3, 1, 2), g(Generator::f(1, 2), -2));
}

TEST(Q, RankThreeExamples) {
  const Weight mu({1, 0, 2});
  EXPECT_EQ(q_element(mu, 3, 4), UEAExpression::identity());
  EXPECT_EQ(q_element(mu, 3, 2), f_decorated(mu, 3, 2, 3) + f_decorated(mu, 3, 3, 3) * f_decorated(mu, 3, 2, 2));
  const UEAExpression q1 = q_element(mu, 3, 1);
  EXPECT_EQ(q1.size(), 4u);
  for (const auto& m : q1.monomials()) {
    bool top = false;
    for (const auto& f : m.factors) top = top || f.q == 3;
    EXPECT_TRUE(top);
  }
}

TEST(Q, MonomialCount) {
  const Weight mu({2, 1, 0, 1});
  for (int s = 1; s <= 4; ++s)
    for (int k = 1; k <= s; ++k) EXPECT_EQ(q_element(mu, s, k).size(), std::size_t{1} << (s - k));
}

TEST(R, Examples) {
  const Weight mu({0, 1, 1});
  for (int i = 1; i <= 3; ++i) EXPECT_EQ(r_element(mu, 3, i, 1), f_decorated(mu, 3, i, i));
  for (int i = 1; i <= 2; ++i)
    EXPECT_EQ(r_element(mu, 3, i, 2),
              f_decorated(mu, 3, i, i + 1) + f_decorated(mu, 3, i + 1, i + 1) * f_decorated(mu, 3, i, i));
  EXPECT_EQ(r_element(mu, 3, 1, 3).size(), 4u);
  for (int i = 1; i <= 3; ++i) EXPECT_EQ(r_element(mu, 3, i, 3 - i + 1), q_element(mu, 3, i));
}

TEST(Phi, FirstTwoOperators) {
  for (const auto& mu : weight_grid(2, 3)) {
    EXPECT_EQ(phi_expression(mu, 1), P(1));
    EXPECT_EQ(phi_expression(mu, 2), g(Generator::pj(2), -(mu.component(1) + 1)) + F(1, 1) * P(1));
  }
}

TEST(Phi, ReconstructionIsFormallyP) {
  for (int rank = 1; rank <= 3; ++rank)
    for (const auto& mu : weight_grid(rank, 2))
      for (int i = 1; i <= rank + 1; ++i) EXPECT_EQ(p_reconstruction(mu, i), P(i)) << mu.to_string() << " " << i;
}

TEST(Phi, HatScale) {
  EXPECT_EQ(phi_hat_scale(Weight({3, 0}), 1), 1);
  EXPECT_EQ(phi_hat_scale(Weight({3, 0}), 2), make_rational(1, 4));
}
