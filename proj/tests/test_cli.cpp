#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "sdrep/cli.hpp"
#include "sdrep/serialize.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "sdrep");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = sdrep::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, IrrepJson) {
  const Result r = run({"irrep", "--m", "3", "--lambda", "1,1", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = sdrep::ojson::parse(r.out);
  EXPECT_EQ(j["dim"], 8);
  EXPECT_EQ(j["weights"]["[0,0]"], 2);
  EXPECT_EQ(j["ffl_verified"], true);
}

TEST(Cli, VerifyFfl) {
  const Result r = run({"verify-ffl", "--n", "2", "--lambda", "1,0"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = sdrep::ojson::parse(r.out);
  EXPECT_EQ(j["n_paths"], 3);
  EXPECT_EQ(j["n_multiexponents"], 3);
  EXPECT_EQ(j["weyl_dim"], 3);
  EXPECT_EQ(j["match"], true);
}

TEST(Cli, LabelGivesJlambdaValues) {
  const Result r = run({"label", "--n", "2", "--lambda", "1,0,1", "--embedding", "phi"});
  ASSERT_EQ(r.code, 0) << r.err;
  const sdrep::JSet j = sdrep::parse_jset(r.out);
  EXPECT_EQ(j.J1, 2);
  for (const auto& [t, v] : j.Jk) EXPECT_EQ(v, t.size() == 1 ? 1 : 2);
}

TEST(Cli, RestrictJsonMatchesLabel) {
  const Result a = run({"restrict", "--n", "1", "--lambda", "1,1", "--embedding", "theta", "--json"});
  const Result b = run({"label", "--n", "1", "--lambda", "1,1", "--embedding", "theta"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, QuotientFromFile) {
  const std::string path = ::testing::TempDir() + "sdrep_mset.json";
  std::ofstream(path) << R"j({"mu0":[1],"M1":1,"Mk":{"2":{"(0)":1}}})j";
  const Result r = run({"quotient", "--n", "1", "--mset", path, "--json"});
  std::remove(path.c_str());
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = sdrep::ojson::parse(r.out);
  EXPECT_EQ(j["dim"], 2);
  EXPECT_EQ(j["label_matches"], true);
}

TEST(Cli, VerifySuiteReport) {
  const Result r = run({"verify", "--suite", "labels", "--seed-grid", "2,1", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = sdrep::ojson::parse(r.out);
  EXPECT_EQ(j["suite"], "labels");
  EXPECT_EQ(j["summary"]["failed"], 0);
  EXPECT_EQ(j["checks"].size(), 4u);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"irrep", "--m", "3", "--lambda", "1,1", "--bogus"}).code, 2);
  EXPECT_EQ(run({"irrep", "--m", "3", "--lambda", "1"}).code, 2);
  EXPECT_EQ(run({"irrep", "--m", "3", "--lambda", "1,-1"}).code, 2);
  EXPECT_EQ(run({"label", "--n", "1", "--lambda", "1,1", "--embedding", "psi"}).code, 2);
  EXPECT_EQ(run({"verify", "--suite", "nope"}).code, 2);
  EXPECT_EQ(run({"verify", "--seed-grid", "3"}).code, 2);
  EXPECT_EQ(run({"quotient", "--n", "1", "--mset", "/nonexistent/file.json"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}
