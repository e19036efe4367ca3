// Copyright 2026 The cee Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cee/cli.hpp"
#include "cee/document.hpp"
#include "test_support.hpp"

namespace cee {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string tmp_file(const std::string& name, const std::string& content) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << content;
  return path;
}

const std::string kInsurance = testing::data_path("insurance.json");

TEST(Cli, ValidateInsurance) {
  const Result r = run({"validate", kInsurance});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("valid: true"), std::string::npos);
}

TEST(Cli, ValidateReportsRowSum) {
  std::ifstream in(kInsurance);
  std::string text((std::istreambuf_iterator<char>(in)), {});
  text.replace(text.find("\"0.65\""), 6, "\"0.55\"");
  const Result r = run({"validate", tmp_file("row_sum.json", text), "--format", "json"});
  EXPECT_EQ(r.code, cli::kInvalidSpace);
  const auto report = nlohmann::json::parse(r.out);
  ASSERT_EQ(report["violations"].size(), 1u);
  EXPECT_EQ(report["violations"][0]["kind"], "row-sum");
}

TEST(Cli, MalformedWeightIsAParseError) {
  const Result r = run({"validate", tmp_file("bad.json", R"({"coordinates": [{"id": "a", "labels": ["0"]}],
    "observational": {"0": "one"}})")});
  EXPECT_EQ(r.code, cli::kUsage);
  EXPECT_NE(r.err.find("observational.0"), std::string::npos);
}

TEST(Cli, ActiveEffectReportsTheComparedQuantities) {
  const Result r = run({"effect", "--active", "-U", "ins", "--omega", "ins=Y", "--event", "pay=1000",
                        kInsurance, "--format", "json"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto report = nlohmann::json::parse(r.out);
  EXPECT_EQ(report["verdict"], "Active");
  EXPECT_EQ(report["compared"]["kernel"]["fraction"], "0");
  EXPECT_EQ(report["compared"]["observational"]["fraction"], "1/160");
  EXPECT_EQ(parse_rational(report["compared"]["observational"]["decimal"].get<std::string>()),
            Rational(1, 160));
}

TEST(Cli, ConditionalVariants) {
  Result r = run({"effect", "-U", "ins", "--omega", "ins=Y", "--event", "pay=1000", "--given", "dan=N",
                  kInsurance});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("verdict: NoEffect"), std::string::npos);
  r = run({"effect", "-U", "ins", "--omega", "ins=Y", "--event", "pay=1000", "--given",
           "dan=N,ins=Y,pay=0", kInsurance});
  EXPECT_EQ(r.code, cli::kUndetermined);
  EXPECT_NE(r.out.find("ZeroMeasureConditioning"), std::string::npos);
  r = run({"effect", "-U", "ins", "--omega", "ins=Y", "--event", "pay=1000", "--given", "coords:ins",
           kInsurance});
  EXPECT_EQ(r.code, cli::kUndetermined);
  EXPECT_NE(r.out.find("NotMutuallyAbsCont"), std::string::npos);
}

TEST(Cli, ClassifyNeedsTheFullFamily) {
  const Result r = run({"classify", "-U", "ins", "--omega", "ins=Y", "--event", "pay=1000", kInsurance});
  EXPECT_EQ(r.code, cli::kKernelMissing);
  EXPECT_NE(r.err.find("{dan}"), std::string::npos);
}

TEST(Cli, ClassifyDormantOnTheCopySpace) {
  const Result r = run({"classify", "-U", "x0", "--omega", "x0=0,x1=1", "--event", "diagonal",
                        testing::data_path("copy_space.json")});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("verdict: Dormant"), std::string::npos);
}

TEST(Cli, Scores) {
  Result r = run({"score", "-U", "ins", "--Q", "delta:ins=N", "--event", "pay=1000", kInsurance,
                  "--format", "json"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["score"]["fraction"], "7/800");

  r = run({"score", "-U", "ins", "--Q", "insured", "--sigma", "pay", "--diff", "mean+var", "--rv", "pay",
           kInsurance, "--format", "json"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto score = nlohmann::json::parse(r.out)["score"];
  EXPECT_EQ(score[0]["decimal"], "8.45");
  EXPECT_EQ(score[1]["decimal"], "-6244.5975");

  r = run({"score", "-U", "", "--Q", "uniform", "--event", "pay=1000", kInsurance, "--format", "json"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["score"]["fraction"], "0");

  r = run({"score", "-U", "ins", "--max", "--event", "pay=1000", "--scale", "f2", kInsurance});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_NE(r.out.find("argmax: {ins} = (N)"), std::string::npos);

  r = run({"score", "-U", "ins", "--Q", "insured", "--sigma", "pay", kInsurance});
  EXPECT_EQ(r.code, cli::kUsage);
}

TEST(Cli, MarginalizeRoundTrips) {
  const Result r = run({"marginalize", "--coords", "ins,pay", kInsurance});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const SpaceDocument small = parse_document(r.out);
  EXPECT_EQ(small.space.observational()(parse_event_predicate(small.space.space(), "pay=1000")),
            Rational(1, 160));
  EXPECT_TRUE(is_marginalization_of(small.space, testing::insurance().space));
  const std::string path = tmp_file("marginal.json", r.out);
  EXPECT_EQ(run({"validate", path}).code, cli::kOk);

  const Result all = run({"marginalize", "--coords", "dan,ins,pay", kInsurance});
  const Result again = run({"marginalize", "--coords", "dan,ins,pay", tmp_file("all.json", all.out)});
  EXPECT_EQ(all.out, again.out);
  EXPECT_EQ(all.out, emit_document(testing::insurance().space));
}

TEST(Cli, InterveneEmitsAValidSpace) {
  const Result r = run({"intervene", "-U", "ins", "--Q", "uninsured", kInsurance});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const SpaceDocument after = parse_document(r.out);
  EXPECT_TRUE(validate(after.space).empty());
  EXPECT_EQ(after.space.observational()(parse_event_predicate(after.space.space(), "pay=1000")),
            Rational(3, 200));
}

TEST(Cli, GenIsDeterministicAndValid) {
  const Result a = run({"gen", "--seed", "12", "--mode", "partial"});
  const Result b = run({"gen", "--seed", "12", "--mode", "partial"});
  ASSERT_EQ(a.code, cli::kOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run({"validate", tmp_file("gen.json", a.out)}).code, cli::kOk);
  EXPECT_EQ(run({"gen", "--kind", "null", "-U", "x1", "--seed", "3"}).code, cli::kOk);
  EXPECT_EQ(run({"gen", "--kind", "weird"}).code, cli::kUsage);
}

TEST(Cli, JsonReportsAreDeterministic) {
  const std::vector<std::string> args{"score", "-U", "ins", "--max", "--sigma", "pay", "--rv", "pay",
                                      kInsurance, "--format", "json"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, BlockCapFromEnvironment) {
  const std::vector<std::string> args{"effect", "-U", "ins", "--omega", "ins=Y", "--sigma", "coords:dan,pay",
                                      kInsurance};
  EXPECT_EQ(run(args).code, cli::kOk);
  setenv("CEE_BLOCK_CAP", "8", 1);
  EXPECT_EQ(run(args).code, cli::kUsage);
  setenv("CEE_BLOCK_CAP", "zero", 1);
  EXPECT_EQ(run(args).code, cli::kUsage);
  unsetenv("CEE_BLOCK_CAP");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"effect", "-U", "ins", kInsurance}).code, cli::kUsage);
  EXPECT_EQ(run({"effect", "-U", "ins", "--omega", "dan=N", "--event", "pay=1000", kInsurance}).code,
            cli::kUsage);
  EXPECT_EQ(run({"validate", "/nonexistent.json"}).code, cli::kUsage);
  EXPECT_EQ(run({"--help"}).code, cli::kOk);
}

}  // namespace
}  // namespace cee
