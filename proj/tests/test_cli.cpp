#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "primdec/script.hpp"
#include "test_util.hpp"

using namespace primdec;
using namespace primdec::testing;

namespace {

const std::filesystem::path kFixtures = PRIMDEC_FIXTURE_DIR;

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

RunOptions json_options() {
  RunOptions o;
  o.mode = OutputMode::Json;
  o.base_dir = kFixtures.string();
  return o;
}

nlohmann::json run_json(const std::string& src) {
  RunOutcome out = run_source(src, json_options());
  EXPECT_EQ(out.exit_code, 0) << out.error;
  return nlohmann::json::parse(out.output);
}

}  // namespace

TEST(Parse, StatementCount) {
  Script s = parse_script("ring r=0,(x,y),dp; ideal I=x^2,x*y; primdec I;");
  EXPECT_EQ(s.statements.size(), 3u);
}

TEST(Parse, WeightedOrder) {
  EXPECT_NO_THROW(parse_script("ring r=0,(x,y,z),wp(3,4,5); ideal I = x*y;"));
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_script("ideal I = x^2;"), ParseError);
  EXPECT_THROW(parse_script("ring r=0,(x,y),dp; primdec J;"), ParseError);
  EXPECT_THROW(parse_script("ring r=0,(x,y),dp; ideal I = x2y;"), ParseError);
  try {
    parse_script("ring r=5,(x),dp;");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("only characteristic 0 supported"), std::string::npos);
  }
}

TEST(Parse, RoundTrip) {
  auto r = ring_of({"x", "y", "z"});
  std::mt19937 rng(9);
  for (int t = 0; t < 50; ++t) {
    Polynomial f = random_polynomial(r, rng, 4, 3).scaled(Rational(t + 1) / 7);
    EXPECT_EQ(parse_polynomial(f.to_string(), r), f);
  }
}

TEST(Run, ThreeMonomialSession) {
  auto j = run_json("ring s=0,(x,y,z),dp; ideal i=x^2*y,x*z^2,y^2*z; primdec i;");
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["components"].size(), 4u);
  EXPECT_TRUE(j[0]["validation"]["ok"].get<bool>());
}

TEST(Run, HullAndMinass) {
  auto j = run_json("ring r=0,(x,y),dp; ideal I=x^2,x*y; hull I; ideal J=x*y; minass J;");
  EXPECT_EQ(j[0]["generators"], nlohmann::json::array({"x"}));
  EXPECT_EQ(j[1]["primes"], nlohmann::json::parse(R"([["x"],["y"]])"));
}

TEST(Run, RationalCoefficientsAreStrings) {
  auto j = run_json("ring r=0,(x),dp; ideal I=5/6*x^2+x; hull I;");
  for (const auto& g : j[0]["generators"]) EXPECT_TRUE(g.is_string());
}

TEST(Run, ExitCodes) {
  EXPECT_EQ(run_source("ring r=0,(x),dp; ideal I = x^;", json_options()).exit_code, 1);
  RunOptions tight = json_options();
  tight.component_bound = 1;
  EXPECT_EQ(run_source("ring r=0,(x,y),dp; ideal I=x^2,x*y; primdec I;", tight).exit_code, 2);
  EXPECT_EQ(run_source("ring r=0,(x),dp; ideal I=1; primdec I;", json_options()).exit_code, 2);
}

TEST(Run, ValidateCommand) {
  RunOutcome ok = run_source("ring r=0,(x,y),dp; ideal I=x^2,x*y; validate I, worked_example.json;", json_options());
  EXPECT_EQ(ok.exit_code, 0) << ok.error;
  std::filesystem::path bad = std::filesystem::temp_directory_path() / "primdec_bad.json";
  std::ofstream(bad) << R"([{"command":"primdec","input":"I","components":[
      {"generators":["x"],"prime":["x"],"codim":1,"embedded":false},
      {"generators":["x","y"],"prime":["x","y"],"codim":2,"embedded":true}]}])";
  RunOutcome fail = run_source("ring r=0,(x,y),dp; ideal I=x^2,x*y; validate I, " + bad.string() + ";", json_options());
  EXPECT_EQ(fail.exit_code, 3);
  EXPECT_FALSE(nlohmann::json::parse(fail.output)[0]["validation"]["intersection_ok"].get<bool>());
}

TEST(Run, Determinism) {
  std::string src = slurp(kFixtures / "rank_three_module.pd");
  EXPECT_EQ(run_source(src, json_options()).output, run_source(src, json_options()).output);
}

TEST(Fixtures, MatchExpectedOutput) {
  for (const auto& entry : std::filesystem::directory_iterator(kFixtures)) {
    if (entry.path().extension() != ".pd") continue;
    std::filesystem::path expected = entry.path();
    expected.replace_extension(".json");
    RunOutcome out = run_source(slurp(entry.path()), json_options());
    ASSERT_EQ(out.exit_code, 0) << entry.path() << ": " << out.error;
    EXPECT_EQ(compare_outputs(out.output, slurp(expected)), "") << entry.path();
    Script script = parse_script(slurp(entry.path()));
    EXPECT_EQ(validate_script(script, slurp(expected), json_options()).exit_code, 0) << entry.path();
  }
}

TEST(CompareOutputs, ToleratesEmbeddedRepresentative) {
  std::string a = R"([{"command":"primdec","input":"I","components":[
      {"generators":["x"],"prime":["x"],"codim":1,"embedded":false},
      {"generators":["y^2","x*y","x^2"],"prime":["y","x"],"codim":2,"embedded":true}],
      "validation":{"ok":true}}])";
  std::string b = R"([{"command":"primdec","input":"I","components":[
      {"generators":["x"],"prime":["x"],"codim":1,"embedded":false},
      {"generators":["y","x^2"],"prime":["y","x"],"codim":2,"embedded":true}],
      "validation":{"ok":true}}])";
  EXPECT_EQ(compare_outputs(a, b), "");
  std::string c = R"([{"command":"primdec","input":"I","components":[
      {"generators":["x^2"],"prime":["x"],"codim":1,"embedded":false}],"validation":{"ok":true}}])";
  EXPECT_NE(compare_outputs(a, c), "");
}
