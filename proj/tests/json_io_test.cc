// Copyright 2026 The mwp-attack Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mwp/json_io.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "fixtures.h"
#include "mwp/error.h"
#include "mwp/rule_paraphraser.h"

namespace mwp {
namespace {

using nlohmann::json;

std::filesystem::path Fresh(const std::string& name) {
  const auto path = std::filesystem::temp_directory_path() /
                    ("mwp_json_io_test_" + std::to_string(::getpid()) + "_" + name);
  std::filesystem::remove(path);
  return path;
}

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kIoError;
}

TEST(RationalJsonTest, NumbersAndExactStrings) {
  EXPECT_EQ(RationalToJson(Rational(12)), json(12));
  EXPECT_EQ(RationalToJson(Rational(-3, 2)), json(-1.5));
  EXPECT_EQ(RationalToJson(Rational(1, 3)), json("1/3"));
  std::mt19937 rng(3);
  for (int i = 0; i < 500; ++i) {
    const Rational r(static_cast<int>(rng() % 2001) - 1000,
                     static_cast<int>(1 + rng() % 64));
    EXPECT_EQ(RationalFromJson(RationalToJson(r)), r) << r;
  }
  EXPECT_EQ(RationalFromJson(json("2.5")), Rational(5, 2));
  EXPECT_THROW(RationalFromJson(json(true)), Error);
  EXPECT_THROW(RationalFromJson(json("abc")), Error);
}

TEST(ResultsFileTest, RoundTripKeepsSummaries) {
  const fixtures::CampaignFixture f = fixtures::TwentyProblemCampaign();
  ScriptedSolver a(f.script, f.fallback, "alpha");
  ScriptedSolver b({}, "X = 1", "beta");
  RuleParaphraser rules;
  std::vector<CampaignReport> reports = {
      RunCampaign(f.records, a, rules, CampaignConfig{}),
      RunCampaign(f.records, b, rules, CampaignConfig{})};
  // Mark one record errored to cover that line shape.
  reports[1].outcomes[4].errored = true;
  reports[1].outcomes[4].error = "down";
  reports[1].outcomes[4].attacks.clear();
  reports[1] = Summarize("beta", reports[1].outcomes,
                         {AttackMethod::kQuestionReordering,
                          AttackMethod::kSentenceParaphrasing});

  const auto path = Fresh("results.jsonl");
  WriteResults(path, reports);
  const auto back = ReadResults(path);
  ASSERT_EQ(back.size(), 2u);
  for (size_t s = 0; s < 2; ++s) {
    EXPECT_EQ(back[s].solver, reports[s].solver);
    EXPECT_EQ(back[s].evaluated, reports[s].evaluated);
    EXPECT_EQ(back[s].errored, reports[s].errored);
    EXPECT_DOUBLE_EQ(back[s].original_accuracy, reports[s].original_accuracy);
    ASSERT_EQ(back[s].outcomes.size(), reports[s].outcomes.size());
    for (size_t i = 0; i < back[s].outcomes.size(); ++i) {
      EXPECT_EQ(back[s].outcomes[i].record, reports[s].outcomes[i].record);
      ASSERT_EQ(back[s].outcomes[i].attacks.size(), reports[s].outcomes[i].attacks.size());
      for (size_t k = 0; k < back[s].outcomes[i].attacks.size(); ++k) {
        EXPECT_EQ(ToJson(back[s].outcomes[i].attacks[k]),
                  ToJson(reports[s].outcomes[i].attacks[k]));
      }
    }
    for (size_t m = 0; m < 2; ++m) {
      EXPECT_EQ(back[s].methods[m].successes, reports[s].methods[m].successes);
      EXPECT_DOUBLE_EQ(back[s].methods[m].mean_queries, reports[s].methods[m].mean_queries);
    }
  }
  EXPECT_TRUE(back[1].outcomes[4].errored);
  EXPECT_EQ(back[1].outcomes[4].error, "down");
  std::filesystem::remove(path);
}

TEST(ResultsFileTest, BadLineNamesItsNumber) {
  const auto path = Fresh("bad.jsonl");
  std::ofstream(path) << "\n{\"solver\": \"s\"}\n";
  try {
    ReadResults(path);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kFormatError);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
  std::filesystem::remove(path);
}

TEST(AttackResultJsonTest, MissingFieldIsFormatError) {
  AttackResult r;
  r.problem_id = "x";
  json j = ToJson(r);
  EXPECT_EQ(ToJson(AttackResultFromJson(j)), j);
  j.erase("queries_used");
  EXPECT_EQ(CodeOf([&] { AttackResultFromJson(j); }), ErrorCode::kFormatError);
}

TEST(ConfigJsonTest, RoundTripAndOverrides) {
  CampaignConfig c;
  c.methods = {AttackMethod::kSentenceParaphrasing};
  c.m = 3;
  c.budget = 64;
  c.tolerance = 0.01;
  c.seed = 9;
  c.parallelism = 2;
  c.success_rule = SuccessRule::kPredictionChange;
  c.reorder.connective = "provided that";
  c.reorder.clause_joiner = "while";
  c.reorder.resolve_pronouns = false;
  EXPECT_EQ(ToJson(ConfigFromJson(ToJson(c))), ToJson(c));

  const CampaignConfig partial = ConfigFromJson(json{{"m", 2}}, c);
  EXPECT_EQ(partial.m, 2);
  EXPECT_EQ(partial.budget, 64u);
}

TEST(ConfigJsonTest, RejectsUnknownAndIllTyped) {
  for (const char* text :
       {R"({"mm": 2})", R"({"m": "7"})", R"({"m": 0})", R"({"methods": ["XX"]})",
        R"({"methods": []})", R"({"tol": -1})", R"({"success_rule": "maybe"})",
        R"({"resolve_pronouns": 1})", R"([1])", R"({"budget": 1.5})"}) {
    EXPECT_EQ(CodeOf([&] { ConfigFromJson(json::parse(text)); }),
              ErrorCode::kInvalidConfig)
        << text;
  }
}

TEST(ScriptedSolverFileTest, LoadsScriptAndName) {
  const auto path = Fresh("script.json");
  std::ofstream(path) << R"({"name": "g2t", "fallback": "X = 1",
                            "script": {"How  many?": "X = 2"}})";
  auto solver = LoadScriptedSolver(path);
  EXPECT_EQ(solver->name(), "g2t");
  EXPECT_EQ(solver->Solve("a", "How many?"), "X = 2");
  EXPECT_EQ(solver->Solve("a", "Other?"), "X = 1");
  EXPECT_EQ(LoadScriptedSolver(path, "renamed")->name(), "renamed");
  std::ofstream(path) << R"({"script": [1]})";
  EXPECT_EQ(CodeOf([&] { LoadScriptedSolver(path); }), ErrorCode::kInvalidConfig);
  std::filesystem::remove(path);
}

// The checked-in corpus and script are generated from the fixtures; they
// must not drift apart.
TEST(FixtureDataTest, CheckedInFilesMatchTheFixtures) {
  const std::filesystem::path dir = MWP_TEST_DATA_DIR;
  const LoadedDataset corpus =
      LoadDataset(dir / "corpus.jsonl", DatasetFormat::kGenericJsonl);
  EXPECT_TRUE(corpus.quarantined.empty());
  EXPECT_EQ(corpus.records, fixtures::FixtureCorpus());
  std::ifstream in(dir / "solver_script.json");
  EXPECT_EQ(json::parse(in), fixtures::FixtureSolverScript());
}

}  // namespace
}  // namespace mwp
