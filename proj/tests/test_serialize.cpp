#include <gtest/gtest.h>

#include "sdrep/serialize.hpp"

using namespace sdrep;

namespace {

JSet standard_label(int n) {
  const SemidirectModule mod = restrict_module(build_irrep(n + 2, Weight::fundamental(n + 1, 1)), Embedding::Phi);
  return compute_jset(mod, *find_generator(mod));
}

}  // namespace

TEST(Serialize, StandardLabelRankTwo) {
  EXPECT_EQ(serialize_jset(standard_label(2)),
            R"j({"mu0":[0,0],"J1":2,"J":{"2":{"[0]":1,"[1]":1},"3":{"[0,0]":1,"[1,0]":1}}})j");
}

TEST(Serialize, RoundTripAndStable) {
  for (int n = 1; n <= 3; ++n) {
    const JSet j = standard_label(n);
    const std::string text = serialize_jset(j);
    EXPECT_EQ(parse_jset(text), j);
    EXPECT_EQ(serialize_jset(parse_jset(text)), text);
    EXPECT_EQ(serialize_jset(standard_label(n)), text);
  }
}

TEST(Serialize, MSetAcceptsParenthesizedKeys) {
  const MSet m = parse_mset(R"j({"mu0":[1],"M1":1,"Mk":{"2":{"(0)":2}}})j");
  EXPECT_EQ(m.mu0, Weight({1}));
  EXPECT_EQ(m.M1, 1);
  EXPECT_EQ(m.Mk.at({0}), 2);
  EXPECT_EQ(parse_mset(serialize_mset(m)), m);
}

TEST(Serialize, RejectsMalformedInput) {
  EXPECT_THROW(parse_mset(R"j({"mu0":[1],"M1":1,"Mk":{"3":{"(0)":2}}})j"), std::invalid_argument);
  EXPECT_THROW(parse_mset(R"j({"mu0":[1],"Mk":{}})j"), std::invalid_argument);
  EXPECT_THROW(parse_mset(R"j({"mu0":[1],"M1":1,"Mk":{"2":{"(x)":2}}})j"), std::invalid_argument);
  EXPECT_THROW(parse_jset("not json"), nlohmann::json::exception);
}

TEST(Serialize, TupleKeys) {
  EXPECT_EQ(tuple_key({0, 1}), "[0,1]");
  EXPECT_EQ(parse_tuple_key("(2, 0)"), (std::vector<int>{2, 0}));
  EXPECT_THROW(parse_tuple_key("[]"), std::invalid_argument);
}
