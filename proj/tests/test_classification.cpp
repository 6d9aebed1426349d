#include <gtest/gtest.h>

#include "sdrep/classification.hpp"
#include "sdrep/ffl.hpp"
#include "sdrep/serialize.hpp"

using namespace sdrep;

namespace {

SemidirectModule restricted(const Weight& lambda) {
  return restrict_module(build_irrep(lambda.rank() + 1, lambda), Embedding::Phi);
}

JSet label(const SemidirectModule& mod) { return compute_jset(mod, *find_generator(mod)); }

MSet standard_mset(int n) {
  MSet m{Weight::zero(n), 2, {}};
  std::vector<std::vector<int>> level{{0}, {1}};
  for (int k = 2; k <= n + 1; ++k) {
    for (const auto& t : level) m.Mk[t] = 1;
    for (auto& t : level) t.push_back(0);
  }
  return m;
}

}  // namespace

TEST(MSet, StandardLabelIsAdmissible) {
  for (int n = 1; n <= 3; ++n) {
    EXPECT_TRUE(validate_mset(standard_mset(n)));
    EXPECT_EQ(lambda_from_mset(standard_mset(n)), Weight::fundamental(n + 1, 1));
  }
}

TEST(MSet, BoundViolation) {
  MSet m = standard_mset(2);
  m.Mk[{0}] = m.mu0.component(1) + 2;
  EXPECT_FALSE(validate_mset(m));
  EXPECT_THROW(lambda_from_mset(m), std::invalid_argument);
}

TEST(MSet, AntitoneViolation) {
  MSet m{Weight({1}), 2, {{{0}, 1}, {{1}, 2}}};
  EXPECT_FALSE(validate_mset(m));
  m.Mk[{0}] = 2;
  EXPECT_TRUE(validate_mset(m));
}

TEST(MSet, MissingOrExtraEntries) {
  MSet m = standard_mset(1);
  m.Mk.erase({1});
  EXPECT_FALSE(validate_mset(m));
  m = standard_mset(1);
  m.Mk[{2}] = 1;
  EXPECT_FALSE(validate_mset(m));
}

TEST(MSet, FirstValueOneGivesZeroLambdaOne) {
  const MSet m{Weight({2, 1}), 1, {{{0}, 2}, {{0, 0}, 1}, {{0, 1}, 1}}};
  ASSERT_TRUE(validate_mset(m));
  EXPECT_EQ(lambda_from_mset(m), Weight({0, 2, 1}));
}

TEST(MSet, EnumerationIsValidAndDistinct) {
  const auto all = enumerate_msets(2, 1, 2);
  EXPECT_FALSE(all.empty());
  std::set<std::string> seen;
  for (const auto& m : all) {
    EXPECT_TRUE(validate_mset(m));
    seen.insert(serialize_mset(m));
  }
  EXPECT_EQ(seen.size(), all.size());
}

TEST(MSet, JlambdaRoundTrip) {
  for (const auto& w : {Weight({1, 0}), Weight({2, 1}), Weight({1, 2, 0})}) {
    const JSet j = label(restricted(w));
    EXPECT_EQ(lambda_from_mset(to_mset(j)), w);
    EXPECT_EQ(j.J1, w.component(1) + 1);
  }
}

TEST(Quotient, FullLabelCutsNothing) {
  const Weight w({1, 1});
  const SemidirectModule mod = restricted(w);
  const MSet m = to_mset(label(mod));
  EXPECT_TRUE(quotient_spec(m).cut_generators.empty());
  const SemidirectModule q = build_quotient(mod, m);
  EXPECT_EQ(q.dim(), mod.dim());
  EXPECT_EQ(label(q), label(mod));
}

TEST(Quotient, RankOneDoublet) {
  const MSet m{Weight({1}), 1, {{{0}, 1}}};
  const Weight w = lambda_from_mset(m);
  EXPECT_EQ(w, Weight({0, 1}));
  const SemidirectModule q = build_quotient(restricted(w), m);
  EXPECT_EQ(q.dim(), 2u);
  EXPECT_EQ(label(q), to_jset(m));
}

TEST(Quotient, StandardLabelGivesStandardModule) {
  for (int n = 1; n <= 3; ++n) {
    const MSet m = standard_mset(n);
    const SemidirectModule q = build_quotient(restricted(lambda_from_mset(m)), m);
    EXPECT_EQ(q.dim(), std::size_t(n + 2));
    EXPECT_EQ(label(q), to_jset(m));
  }
}

TEST(Quotient, RoundTripRankOne) {
  for (const auto& m : enumerate_msets(1, 2, 3)) {
    const SemidirectModule mod = restricted(lambda_from_mset(m));
    const SemidirectModule q = build_quotient(mod, m);
    EXPECT_EQ(label(q), to_jset(m)) << serialize_mset(m);
    EXPECT_EQ(cut_submodule(mod, quotient_spec(m)).rank() + q.dim(), mod.dim());
  }
}

TEST(Quotient, RejectsWrongModule) {
  const MSet m = standard_mset(1);
  EXPECT_THROW(build_quotient(restricted(Weight({2, 0})), m), std::invalid_argument);
  const SemidirectModule theta = restrict_module(build_irrep(3, Weight({1, 0})), Embedding::Theta);
  EXPECT_THROW(build_quotient(theta, m), std::invalid_argument);
}

TEST(Branching, Examples) {
  EXPECT_EQ(branching_multiset(Weight({1, 0})), (std::vector<Weight>{Weight({0}), Weight({1})}));
  for (const auto& w : {Weight({1, 1}), Weight({2, 0, 1}), Weight({1, 1, 1})}) {
    std::uint64_t total = 0;
    for (const auto& mu : branching_multiset(w)) total += weyl_dim(mu);
    EXPECT_EQ(total, weyl_dim(w));
  }
}
