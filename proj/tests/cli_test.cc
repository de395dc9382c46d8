// Copyright 2026 The Simplex Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "gtest/gtest.h"
#include "json.hpp"
#include "simplex/classifier.h"
#include "simplex/evaluation.h"
#include "simplex/ngram_model.h"
#include "support/service_fixtures.h"

namespace simplex {
namespace {

using ::simplex::testing::Fixture;
using ::simplex::testing::FixtureFlags;

struct CliRun {
  int code = -1;
  std::string out;
  std::string err;
};

EnvLookup NoEnv() {
  return [](std::string_view) -> std::optional<std::string> {
    return std::nullopt;
  };
}

CliRun RunCli(std::vector<std::string> args, const std::string& stdin_text = "",
              const EnvLookup& env = NoEnv()) {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  CliRun r;
  r.code = cli::Run(args, in, out, err, env);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream s(text);
  for (std::string line; std::getline(s, line);) out.push_back(line);
  return out;
}

std::vector<std::string> SimplifyArgs(std::vector<std::string> extra) {
  std::vector<std::string> args = {"simplify"};
  for (auto& f : FixtureFlags()) args.push_back(f);
  for (auto& e : extra) args.push_back(e);
  return args;
}

// Fixture args with `flag` set to `value` instead of the fixture default.
std::vector<std::string> WithFlag(const std::string& flag,
                                  const std::string& value) {
  std::vector<std::string> args = SimplifyArgs({});
  for (size_t i = 0; i + 1 < args.size(); ++i) {
    if (args[i] == flag) {
      args[i + 1] = value;
      return args;
    }
  }
  args.push_back(flag);
  args.push_back(value);
  return args;
}

std::string WriteTemp(const std::string& name, const std::string& contents) {
  const std::string path = ::testing::TempDir() + "/" + name;
  std::ofstream(path) << contents;
  return path;
}

TEST(CliSimplifyTest, ThreeLineFileGivesThreeLines) {
  const std::string input = WriteTemp(
      "three.txt",
      "oregano is an indispensable ingredient in greek cuisine .\n"
      "the city is large .\n"
      "they purchase food in the market near their residence .\n");
  const CliRun r = RunCli(SimplifyArgs({"--mode", "we", "--phi", "0.0",
                                        "--input", input}));
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Lines(r.out),
            (std::vector<std::string>{
                "oregano is a vital element in greek cooking .",
                "the city is large .",
                "they buy food in the market near their house ."}));
  EXPECT_TRUE(r.err.empty());
}

TEST(CliSimplifyTest, ReadsStdinAndKeepsBlankLines) {
  const CliRun r = RunCli(SimplifyArgs({}), "the city is large .\n\n  \nwe demonstrate the plan .\n");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Lines(r.out), (std::vector<std::string>{
                              "the city is large .", "", "",
                              "we show the plan ."}));
}

TEST(CliSimplifyTest, TraceGoesToStderrAsJsonLines) {
  const CliRun r = RunCli(SimplifyArgs({"--trace"}),
                          "oregano is an indispensable ingredient in greek "
                          "cuisine .\nthe city is large .\n");
  ASSERT_EQ(r.code, 0) << r.err;
  const std::vector<std::string> traces = Lines(r.err);
  ASSERT_EQ(traces.size(), 2u);
  const auto first = nlohmann::json::parse(traces[0]);
  EXPECT_EQ(first["trace_version"], 1);
  EXPECT_EQ(first["simplified"], Lines(r.out)[0]);
  bool saw_vital = false;
  for (const auto& t : first["trace"]) saw_vital |= t["chosen"] == "vital";
  EXPECT_TRUE(saw_vital);
  EXPECT_TRUE(nlohmann::json::parse(traces[1])["trace"].empty());
}

TEST(CliSimplifyTest, InvalidPhiIsAConfigError) {
  const CliRun r = RunCli(SimplifyArgs({"--phi", "1.5"}), "the city .\n");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("--phi"), std::string::npos) << r.err;
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(RunCli(SimplifyArgs({"--phi", "abc"})).code, 2);
  EXPECT_EQ(RunCli(SimplifyArgs({"--phi", "-0.1"})).code, 2);
}

TEST(CliSimplifyTest, TransformerWithoutEndpointIsAConfigError) {
  const CliRun r = RunCli({"simplify", "--mode", "transformer", "--corpus",
                           Fixture("corpus.txt"), "--classifier",
                           Fixture("classifier.mlp"), "--thesaurus",
                           Fixture("thesaurus.tsv")},
                          "the city .\n");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("--embed-endpoint"), std::string::npos) << r.err;
}

TEST(CliSimplifyTest, OtherConfigErrors) {
  EXPECT_EQ(RunCli(SimplifyArgs({"--mode", "bert"})).code, 2);
  EXPECT_EQ(RunCli({"simplify"}).code, 2);  // no resources
  EXPECT_EQ(RunCli({"frobnicate"}).code, 2);
  EXPECT_EQ(RunCli({}).code, 2);
  EXPECT_EQ(RunCli(WithFlag("--embed-endpoint", "ftp://x")).code, 2);
  EXPECT_EQ(RunCli({"--help"}).code, 0);
}

TEST(CliSimplifyTest, UnreadableResourcesExitThree) {
  const CliRun r =
      RunCli(WithFlag("--corpus", "/nonexistent/corpus.txt"), "the city .\n");
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("/nonexistent/corpus.txt"), std::string::npos) << r.err;
  EXPECT_EQ(RunCli(WithFlag("--classifier", Fixture("corpus.txt"))).code, 3);
  EXPECT_EQ(RunCli(SimplifyArgs({"--input", "/nonexistent/in.txt"})).code, 3);
  EXPECT_EQ(RunCli(WithFlag("--embed-endpoint", "cache:/nonexistent")).code, 3);
}

TEST(CliSimplifyTest, TransformerModeIsDeterministic) {
  const std::string text = "it is situated at the coast of the baltic sea .\n";
  const CliRun a = RunCli(SimplifyArgs({"--mode", "transformer"}), text);
  const CliRun b = RunCli(SimplifyArgs({"--mode", "transformer"}), text);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, text);
}

TEST(CliSimplifyTest, EnvironmentSuppliesConfigAndFlagsWin) {
  std::map<std::string, std::string> vars = {
      {"SIMPLEX_CORPUS", Fixture("corpus.txt")},
      {"SIMPLEX_CLASSIFIER", Fixture("classifier.mlp")},
      {"SIMPLEX_THESAURUS", Fixture("thesaurus.tsv")},
      {"SIMPLEX_VECTORS", Fixture("vectors.txt")},
      {"SIMPLEX_MORPHOLOGY", std::string(SIMPLEX_DATA_DIR) + "/morphology"},
      {"SIMPLEX_PHI", "0"},
      {"SIMPLEX_MODE", "we"}};
  auto env = [&vars](std::string_view name) -> std::optional<std::string> {
    auto it = vars.find(std::string(name));
    if (it == vars.end()) return std::nullopt;
    return it->second;
  };
  const std::string text = "we demonstrate the plan .\n";
  CliRun r = RunCli({"simplify"}, text, env);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "we show the plan .\n");

  vars["SIMPLEX_PHI"] = "7";
  r = RunCli({"simplify"}, text, env);
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("SIMPLEX_PHI"), std::string::npos) << r.err;
  vars["SIMPLEX_PHI"] = "0.5";
  vars["SIMPLEX_MODE"] = "transformer";  // no endpoint configured
  EXPECT_EQ(RunCli({"simplify"}, text, env).code, 2);
  EXPECT_EQ(RunCli({"simplify", "--mode", "we"}, text, env).code, 0);
}

TEST(CliSimplifyTest, LexiconTrainsTheClassifierAtStartup) {
  std::vector<std::string> args = WithFlag("--classifier", "");
  std::erase(args, "--classifier");
  std::erase(args, "");
  args.push_back("--lexicon");
  args.push_back(Fixture("lexicon.tsv"));
  const CliRun r = RunCli(args, "we demonstrate the plan .\n");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "we show the plan .\n");
}

std::map<std::string, std::string> MachineLines(const std::string& out) {
  std::map<std::string, std::string> m;
  for (const std::string& line : Lines(out)) {
    const size_t eq = line.find('=');
    if (eq != std::string::npos) m[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return m;
}

std::vector<std::string> EvaluateArgs(std::vector<std::string> refs) {
  std::vector<std::string> args = {"evaluate", "--orig",
                                   Fixture("eval_orig.txt"), "--system",
                                   Fixture("eval_system.txt"), "--corpus",
                                   Fixture("corpus.txt")};
  for (auto& r : refs) {
    args.push_back("--refs");
    args.push_back(r);
  }
  return args;
}

TEST(CliEvaluateTest, ReportMatchesLibrary) {
  const std::vector<std::string> refs = {Fixture("eval_ref1.txt"),
                                         Fixture("eval_ref2.txt")};
  const CliRun r = RunCli(EvaluateArgs(refs));
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("mean SARI"), std::string::npos);
  EXPECT_NE(r.out.find("perplexity decrease"), std::string::npos);

  const EvaluationReport expected = EvaluateCorpus(
      ReadEvaluationRecords(Fixture("eval_orig.txt"),
                            Fixture("eval_system.txt"), refs),
      NGramModel::Build(ReadSentences(Fixture("corpus.txt"))), 0.0);
  auto m = MachineLines(r.out);
  EXPECT_EQ(m["references"], "2");
  EXPECT_EQ(m["records"], "10");
  EXPECT_EQ(m["mean_sari"], fmt::format("{}", expected.mean_sari));
  EXPECT_EQ(m["mean_original_pp"], fmt::format("{}", expected.mean_original_pp));
  EXPECT_EQ(m["mean_simplified_pp"],
            fmt::format("{}", expected.mean_simplified_pp));
  EXPECT_EQ(m["perplexity_decrease"],
            fmt::format("{}", expected.perplexity_decrease));
  for (size_t i = 0; i < expected.sari.size(); ++i) {
    EXPECT_EQ(m[fmt::format("sari[{}]", i)], fmt::format("{}", expected.sari[i]));
  }
}

TEST(CliEvaluateTest, RepeatedRefsAreAllUsed) {
  const CliRun one = RunCli(EvaluateArgs({Fixture("eval_ref1.txt")}));
  const CliRun two = RunCli(
      EvaluateArgs({Fixture("eval_ref1.txt"), Fixture("eval_ref2.txt")}));
  ASSERT_EQ(one.code, 0) << one.err;
  ASSERT_EQ(two.code, 0) << two.err;
  EXPECT_EQ(MachineLines(one.out)["references"], "1");
  EXPECT_EQ(MachineLines(two.out)["references"], "2");
  const std::vector<std::string> refs = {Fixture("eval_ref1.txt"),
                                         Fixture("eval_ref2.txt")};
  const auto records = ReadEvaluationRecords(
      Fixture("eval_orig.txt"), Fixture("eval_system.txt"), refs);
  ASSERT_EQ(records[0].references.size(), 2u);
  EXPECT_NE(MachineLines(one.out)["mean_sari"],
            MachineLines(two.out)["mean_sari"]);
}

TEST(CliEvaluateTest, LineCountMismatchExitsTwoNamingFiles) {
  const std::string short_refs =
      WriteTemp("short_refs.txt", "one line .\ntwo lines .\n");
  const CliRun r =
      RunCli(EvaluateArgs({Fixture("eval_ref1.txt"), short_refs}));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("short_refs.txt"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("eval_orig.txt"), std::string::npos) << r.err;
  EXPECT_EQ(RunCli({"evaluate", "--orig", Fixture("eval_orig.txt")}).code, 2);
  std::vector<std::string> bad_phi = EvaluateArgs({Fixture("eval_ref1.txt")});
  bad_phi.push_back("--phi");
  bad_phi.push_back("2");
  EXPECT_EQ(RunCli(bad_phi).code, 2);
}

TEST(CliToolsTest, BuildLmRoundTrips) {
  const std::string path = ::testing::TempDir() + "/fixture.lm";
  const CliRun r = RunCli({"build-lm", "--corpus", Fixture("corpus.txt"),
                           "--output", path});
  ASSERT_EQ(r.code, 0) << r.err;
  const NGramModel built = NGramModel::Build(ReadSentences(Fixture("corpus.txt")));
  EXPECT_EQ(NGramModel::Load(path).Serialize(), built.Serialize());
  EXPECT_EQ(MachineLines(r.out)["vocab_size"],
            std::to_string(built.vocab_size()));
  // A saved model is accepted wherever a corpus is.
  const CliRun e = RunCli({"evaluate", "--orig", Fixture("eval_orig.txt"),
                           "--system", Fixture("eval_system.txt"), "--refs",
                           Fixture("eval_ref1.txt"), "--corpus", path});
  const CliRun t = RunCli(EvaluateArgs({Fixture("eval_ref1.txt")}));
  ASSERT_EQ(e.code, 0) << e.err;
  EXPECT_EQ(e.out, t.out);
}

TEST(CliToolsTest, TrainWritesALoadableClassifier) {
  const std::string path = ::testing::TempDir() + "/trained.mlp";
  const std::vector<std::string> args = {
      "train",    "--corpus", Fixture("corpus.txt"), "--lexicon",
      Fixture("lexicon.tsv"), "--thesaurus", Fixture("thesaurus.tsv"),
      "--output", path,       "--epochs",    "50"};
  const CliRun r = RunCli(args);
  ASSERT_EQ(r.code, 0) << r.err;
  const ComplexityClassifier c = ComplexityClassifier::Load(path);
  auto m = MachineLines(r.out);
  EXPECT_EQ(m["epochs"], "50");
  EXPECT_EQ(m["examples"], "170");
  // Same seed and data, same bytes.
  const std::string first = c.Serialize();
  ASSERT_EQ(RunCli(args).code, 0);
  EXPECT_EQ(ComplexityClassifier::Load(path).Serialize(), first);
  EXPECT_EQ(RunCli({"train", "--corpus", Fixture("corpus.txt")}).code, 2);
}

}  // namespace
}  // namespace simplex
