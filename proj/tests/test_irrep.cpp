#include <gtest/gtest.h>

#include "sdrep/ffl.hpp"
#include "sdrep/irrep.hpp"

using namespace sdrep;

TEST(BuildIrrep, Dimensions) {
  EXPECT_EQ(build_irrep(2, Weight({1})).dim(), 2u);
  EXPECT_EQ(build_irrep(2, Weight({4})).dim(), 5u);
  EXPECT_EQ(build_irrep(3, Weight({1, 1})).dim(), 8u);
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(build_irrep(n + 2, Weight::fundamental(n + 1, 1)).dim(), std::size_t(n + 2));
  EXPECT_EQ(build_irrep(4, Weight({1, 0, 2})).dim(), weyl_dim(Weight({1, 0, 2})));
}

TEST(BuildIrrep, RejectsBadInput) {
  EXPECT_THROW(build_irrep(3, Weight({1})), std::invalid_argument);
  EXPECT_THROW(build_irrep(3, Weight({-1, 0})), std::invalid_argument);
}

TEST(BuildIrrep, BracketsHold) {
  for (const auto& w : {Weight({1, 1}), Weight({2, 1}), Weight({0, 2})})
    EXPECT_TRUE(bracket_violations(build_irrep(3, w)).empty()) << w.to_string();
  EXPECT_TRUE(bracket_violations(build_irrep(4, Weight({1, 0, 1}))).empty());
}

TEST(WeightDecomposition, StandardModuleHasSingletons) {
  for (int m = 2; m <= 5; ++m) {
    const auto wd = weight_decomposition(build_irrep(m, Weight::fundamental(m - 1, 1)));
    EXPECT_EQ(wd.size(), std::size_t(m));
    for (const auto& [w, idx] : wd) EXPECT_EQ(idx.size(), 1u);
  }
}

TEST(WeightDecomposition, TrivialModule) {
  const auto wd = weight_decomposition(build_irrep(3, Weight::zero(2)));
  ASSERT_EQ(wd.size(), 1u);
  EXPECT_EQ(wd.begin()->first, Weight::zero(2));
}

// The adjoint module: joint kernel of ad(H_1), ad(H_2) on sl(3), from the bracket table alone.
TEST(WeightDecomposition, AdjointZeroWeightSpace) {
  const AlgebraSpec sl3 = AlgebraSpec::sl(3);
  const auto gens = sl3.generators();
  std::map<Generator, std::size_t> index;
  for (std::size_t i = 0; i < gens.size(); ++i) index[gens[i]] = i;
  std::vector<SparseMatrix::Triplet> trip;
  std::size_t row = 0;
  for (const auto& h : sl3.cartan()) {
    for (std::size_t c = 0; c < gens.size(); ++c)
      for (const auto& [z, v] : bracket(sl3, h, gens[c])) trip.push_back({row + index.at(z), c, v});
    row += gens.size();
  }
  const SparseMatrix stacked = SparseMatrix::from_triplets(row, gens.size(), trip);
  EXPECT_EQ(kernel_basis(stacked).size(), 2u);

  const auto wd = weight_decomposition(build_irrep(3, Weight({1, 1})));
  EXPECT_EQ(wd.at(Weight({0, 0})).size(), 2u);
}

TEST(HighestWeightVectors, IrrepHasExactlyOne) {
  for (const auto& w : {Weight({2}), Weight({1, 1}), Weight({0, 1, 1})}) {
    const RepModule mod = build_irrep(w.rank() + 1, w);
    const auto h = highest_weight_vectors(mod, mod.algebra.raising());
    ASSERT_EQ(h.size(), 1u);
    EXPECT_EQ(h[0].weight, w);
  }
}

TEST(HighestWeightVectors, Trivial) {
  const RepModule mod = build_irrep(2, Weight({0}));
  const auto h = highest_weight_vectors(mod, mod.algebra.raising());
  ASSERT_EQ(h.size(), 1u);
  EXPECT_EQ(h[0].weight, Weight({0}));
}

TEST(FflBasis, Examples) {
  EXPECT_TRUE(verify_ffl_basis(build_irrep(2, Weight({2})), Weight({2})));
  EXPECT_TRUE(verify_ffl_basis(build_irrep(3, Weight({1, 0})), Weight({1, 0})));
  EXPECT_TRUE(verify_ffl_basis(build_irrep(3, Weight({1, 1})), Weight({1, 1})));
  EXPECT_TRUE(verify_ffl_basis(build_irrep(4, Weight({1, 1, 1})), Weight({1, 1, 1})));
}

TEST(StandardAction, UpToRankFour) {
  for (int n = 1; n <= 4; ++n) EXPECT_TRUE(verify_standard_action(n)) << n;
}

TEST(WeightComponents, SplitsMixedVector) {
  const RepModule mod = build_irrep(3, Weight({1, 0}));
  const SparseVector v = SparseVector::unit(3, 0) + SparseVector::unit(3, 2);
  const auto parts = weight_components(mod, v);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0] + parts[1], v);
}
