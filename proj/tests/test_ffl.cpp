#include <gtest/gtest.h>

#include <algorithm>

#include "sdrep/ffl.hpp"
#include "sdrep/verify.hpp"

using namespace sdrep;

namespace {

// Every sequence of positive roots from a simple root, stepping (p,q)->(p,q+1) or
// (p+1,q), that ends at a simple root.
std::size_t brute_force_paths(int n) {
  std::size_t count = 0;
  std::function<void(int, int, int)> walk = [&](int p, int q, int len) {
    if (p == q && len > 1) ++count;
    if (q + 1 <= n) walk(p, q + 1, len + 1);
    if (p + 1 <= q) walk(p + 1, q, len + 1);
  };
  for (int i = 1; i <= n; ++i) walk(i, i, 1);
  return count + n;
}

}  // namespace

TEST(Dyck, SmallCounts) {
  EXPECT_EQ(enumerate_dyck_paths(1).size(), 1u);
  EXPECT_EQ(enumerate_dyck_paths(2).size(), 3u);
  EXPECT_EQ(enumerate_dyck_paths(3).size(), 7u);
}

TEST(Dyck, MatchesBruteForce) {
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(enumerate_dyck_paths(n).size(), brute_force_paths(n)) << n;
}

TEST(Dyck, RankTwoLongPath) {
  const auto paths = enumerate_dyck_paths(2);
  const DyckPath want{{{1, 1}, {1, 2}, {2, 2}}};
  EXPECT_NE(std::find(paths.begin(), paths.end(), want), paths.end());
}

TEST(Dyck, TwoPathsFromFirstToThirdSimpleRoot) {
  std::size_t n13 = 0;
  for (const auto& p : enumerate_dyck_paths(3))
    if (p.start() == 1 && p.end() == 3) ++n13;
  EXPECT_EQ(n13, 2u);
}

TEST(SLambda, RankOne) {
  for (int m = 0; m <= 4; ++m) EXPECT_EQ(s_lambda(Weight({m})).size(), std::size_t(m + 1));
}

TEST(SLambda, FirstFundamentalRankTwo) {
  const auto s = s_lambda(Weight({1, 0}));
  ASSERT_EQ(s.size(), 3u);
  std::size_t with_a11 = 0, with_a12 = 0;
  for (const auto& e : s) {
    EXPECT_LE(e.total(), 1);
    with_a11 += e.at({1, 1});
    with_a12 += e.at({1, 2});
    EXPECT_EQ(e.at({2, 2}), 0);
  }
  EXPECT_EQ(with_a11, 1u);
  EXPECT_EQ(with_a12, 1u);
}

TEST(SLambda, CountsMatchWeylDimension) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& w : weight_grid(n, 2)) EXPECT_EQ(s_lambda(w).size(), weyl_dim(w)) << w.to_string();
}

TEST(PbwOrder, Examples) {
  EXPECT_TRUE(pbw_greater({1, 1}, {1, 2}));
  EXPECT_TRUE(pbw_greater({1, 3}, {2, 2}));
  EXPECT_FALSE(pbw_greater({2, 3}, {2, 3}));
  const auto order = pbw_order(3);
  EXPECT_EQ(order.size(), 6u);
  EXPECT_EQ(order.front(), (PositiveRoot{1, 1}));
  EXPECT_EQ(order.back(), (PositiveRoot{3, 3}));
}

TEST(WeylDim, Examples) {
  for (int m = 0; m <= 5; ++m) EXPECT_EQ(weyl_dim(Weight({m}), 2), std::uint64_t(m + 1));
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(weyl_dim(Weight::fundamental(n, 1)), std::uint64_t(n + 1));
  EXPECT_EQ(weyl_dim(Weight({1, 1})), 8u);
  EXPECT_EQ(weyl_dim(Weight({2, 0, 2})), 84u);
}
