#include <gtest/gtest.h>

#include "sdrep/lie.hpp"

using namespace sdrep;

namespace {

SparseMatrix image(const SignedGenerator& s, int m) {
  return matrix_realization(s.gen, m).scaled(Rational(s.sign));
}

SparseMatrix theta_then_xi(const Generator& g, int n) {
  const SignedGenerator t = embed_theta(g, n);
  const SignedGenerator x = xi_automorphism(t.gen, n);
  return image({t.sign * x.sign, x.gen}, n + 2);
}

int sign_pow(int k) { return k % 2 == 0 ? 1 : -1; }

}  // namespace

TEST(Weight, ParseForms) {
  EXPECT_EQ(parse_weight("1,0,2"), Weight({1, 0, 2}));
  EXPECT_EQ(parse_weight("[1,0,2]"), Weight({1, 0, 2}));
  EXPECT_EQ(parse_weight("(2)"), Weight({2}));
  EXPECT_THROW(parse_weight("1,x"), std::invalid_argument);
}

TEST(Generator, TextRoundTrip) {
  for (const Generator g : {Generator::e(1, 2), Generator::f(2, 2), Generator::h(3), Generator::pj(1)})
    EXPECT_EQ(parse_generator(g.to_string()), g);
  EXPECT_EQ(Generator::e(1, 2).to_string(), "E[1,2]");
  EXPECT_EQ(Generator::pj(3).to_string(), "P[3]");
}

TEST(Bracket, EFGivesCorootSum) {
  const AlgebraSpec alg = AlgebraSpec::semidirect(3);
  const LieElement want = add(add(lie_element(Generator::h(1)), lie_element(Generator::h(2))),
                              lie_element(Generator::h(3)));
  EXPECT_EQ(bracket(alg, Generator::e(1, 3), Generator::f(1, 3)), want);
}

TEST(Bracket, ERaisesPOnlyAtAdjacentIndex) {
  const AlgebraSpec alg = AlgebraSpec::semidirect(3);
  EXPECT_EQ(bracket(alg, Generator::e(1, 2), Generator::pj(3)), lie_element(Generator::pj(1)));
  EXPECT_TRUE(bracket(alg, Generator::e(1, 2), Generator::pj(2)).empty());
  EXPECT_TRUE(bracket(alg, Generator::pj(1), Generator::pj(2)).empty());
}

TEST(Bracket, AgreesWithMatricesForSl) {
  for (int m = 2; m <= 4; ++m) {
    const AlgebraSpec sl = AlgebraSpec::sl(m);
    for (const auto& x : sl.generators())
      for (const auto& y : sl.generators())
        EXPECT_EQ(commutator(matrix_realization(x, m), matrix_realization(y, m)),
                  matrix_realization(bracket(sl, x, y), m))
            << x.to_string() << " " << y.to_string();
  }
}

TEST(Matrix, Realizations) {
  EXPECT_EQ(matrix_realization(Generator::h(1), 2), matrix_unit(2, 1, 1) - matrix_unit(2, 2, 2));
  EXPECT_EQ(matrix_realization(Generator::e(1, 2), 3), matrix_unit(3, 1, 3));
  EXPECT_EQ(matrix_realization(Generator::f(2, 2), 3), matrix_unit(3, 3, 2));
}

TEST(Embedding, PhiExamples) {
  EXPECT_EQ(embed_phi(Generator::pj(1), 2), (SignedGenerator{1, Generator::f(1, 1)}));
  EXPECT_EQ(embed_phi(Generator::h(2), 2), (SignedGenerator{1, Generator::h(3)}));
}

TEST(Embedding, ThetaMatrixFormula) {
  // Theta(E_{p,q}) is -A_{q+2,p+1}, which is -F_{p+1,q+1}.
  const int n = 3;
  for (int p = 1; p <= n; ++p)
    for (int q = p; q <= n; ++q) {
      EXPECT_EQ(embed_theta(Generator::e(p, q), n), (SignedGenerator{-1, Generator::f(p + 1, q + 1)}));
      EXPECT_EQ(image(embed_theta(Generator::e(p, q), n), n + 2), matrix_unit(n + 2, q + 2, p + 1).scaled(-1));
    }
}

TEST(Embedding, BothPreserveBrackets) {
  for (int n = 1; n <= 3; ++n) {
    const AlgebraSpec alg = AlgebraSpec::semidirect(n);
    for (auto emb : {embed_phi, embed_theta}) {
      auto img = [&](const Generator& g) { return image(emb(g, n), n + 2); };
      for (const auto& x : alg.generators())
        for (const auto& y : alg.generators()) {
          SparseMatrix rhs(n + 2, n + 2);
          for (const auto& [z, c] : bracket(alg, x, y)) rhs = rhs + img(z).scaled(c);
          EXPECT_EQ(commutator(img(x), img(y)), rhs) << n << " " << x.to_string() << " " << y.to_string();
        }
    }
  }
}

TEST(Jacobi, SemidirectAndSl) {
  for (int n = 1; n <= 3; ++n)
    for (const AlgebraSpec alg : {AlgebraSpec::semidirect(n), AlgebraSpec::sl(n + 1)}) {
      const auto g = alg.generators();
      for (const auto& a : g)
        for (const auto& b : g)
          for (const auto& c : g) {
            const LieElement x = lie_element(a), y = lie_element(b), z = lie_element(c);
            LieElement s = bracket(alg, x, bracket(alg, y, z));
            s = add(s, bracket(alg, y, bracket(alg, z, x)));
            s = add(s, bracket(alg, z, bracket(alg, x, y)));
            EXPECT_TRUE(s.empty());
          }
    }
}

TEST(Xi, SimpleGenerators) {
  const int n = 2;
  EXPECT_EQ(xi_automorphism(Generator::h(1), n), (SignedGenerator{1, Generator::h(n + 1)}));
  EXPECT_EQ(xi_automorphism(Generator::e(1, 1), n), (SignedGenerator{1, Generator::e(n + 1, n + 1)}));
  for (int i = 1; i <= n + 1; ++i) {
    const auto once = xi_automorphism(Generator::h(i), n);
    EXPECT_EQ(xi_automorphism(once.gen, n).gen, Generator::h(i));
  }
}

TEST(Xi, PreservesSlBrackets) {
  for (int n = 1; n <= 3; ++n) {
    const AlgebraSpec sl = AlgebraSpec::sl(n + 2);
    auto img = [&](const Generator& g) { return image(xi_automorphism(g, n), n + 2); };
    for (const auto& x : sl.generators())
      for (const auto& y : sl.generators()) {
        SparseMatrix rhs(n + 2, n + 2);
        for (const auto& [z, c] : bracket(sl, x, y)) rhs = rhs + img(z).scaled(c);
        EXPECT_EQ(commutator(img(x), img(y)), rhs);
      }
  }
}

TEST(Xi, OnWeights) {
  EXPECT_EQ(xi_on_weight(Weight({1, 0})), Weight({0, 1}));
  EXPECT_EQ(xi_on_weight(Weight({2, 2})), Weight({2, 2}));
  EXPECT_EQ(xi_on_weight(Weight({1, 0, 2})), Weight({2, 0, 1}));
}

TEST(XiTheta, CartanAndRadicalImagesMatchDisplay) {
  for (int n = 1; n <= 3; ++n) {
    const int m = n + 2;
    for (int i = 1; i <= n; ++i)
      EXPECT_EQ(theta_then_xi(Generator::h(i), n),
                matrix_unit(m, n + 2 - i, n + 2 - i) - matrix_unit(m, n + 1 - i, n + 1 - i));
    for (int j = 1; j <= n + 1; ++j)
      EXPECT_EQ(theta_then_xi(Generator::pj(j), n), matrix_unit(m, n + 2 - j, n + 2).scaled(sign_pow(j + 1)));
  }
}

// The composite carries Theta's minus sign: (-1)^{q-p+1} rather than (-1)^{q-p}.
TEST(XiTheta, RootVectorImagesCarryThetaSign) {
  for (int n = 1; n <= 3; ++n) {
    const int m = n + 2;
    for (int p = 1; p <= n; ++p)
      for (int q = p; q <= n; ++q) {
        const int s = sign_pow(q - p + 1);
        EXPECT_EQ(theta_then_xi(Generator::e(p, q), n), matrix_unit(m, n + 2 - p, n + 1 - q).scaled(s));
        EXPECT_EQ(theta_then_xi(Generator::f(p, q), n), matrix_unit(m, n + 1 - q, n + 2 - p).scaled(s));
      }
  }
}

TEST(XiTheta, UnsignedRootVectorImagesBreakBrackets) {
  const int n = 2, m = n + 2;
  const SparseMatrix e1 = matrix_unit(m, n + 1, n);  // (-1)^0 A_{n+1,n}
  const SparseMatrix p1 = matrix_unit(m, n + 1, n + 2);
  const SparseMatrix p2 = matrix_unit(m, n, n + 2).scaled(-1);
  EXPECT_NE(commutator(e1, p2), p1);
  EXPECT_EQ(commutator(e1.scaled(-1), p2), p1);
}

TEST(RootWeight, SimpleRootIsCartanColumn) {
  EXPECT_EQ(root_weight(3, {2, 2}), Weight({-1, 2, -1}));
  EXPECT_EQ(root_weight(3, {1, 3}), Weight({1, 0, 1}));
}
