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

#include "mwp/report.h"

#include <gtest/gtest.h>

#include <sstream>

namespace mwp {
namespace {

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

// Outcomes with hand-set verdicts; only the summary fields matter here.
RecordOutcome Outcome(const std::string& id, bool correct,
                      const std::vector<std::pair<AttackMethod, bool>>& flips) {
  RecordOutcome o;
  o.record.id = id;
  for (const auto& [method, flipped] : flips) {
    AttackResult r;
    r.method = method;
    r.originally_correct = correct;
    r.success = correct && flipped;
    r.adversarial_correct = correct && !flipped;
    r.queries_used = flipped ? 3 : 2;
    o.attacks.push_back(r);
  }
  return o;
}

constexpr AttackMethod kQR = AttackMethod::kQuestionReordering;
constexpr AttackMethod kSP = AttackMethod::kSentenceParaphrasing;

TEST(RenderReportTest, SingleMethodHasTwoRows) {
  const CampaignReport report = Summarize(
      "graph2tree",
      {Outcome("a", true, {{kQR, true}}), Outcome("b", true, {{kQR, false}}),
       Outcome("c", false, {{kQR, false}})},
      {kQR});
  const auto lines = Lines(RenderReport({report}));
  ASSERT_GE(lines.size(), 3u);
  EXPECT_EQ(lines[0], "Eval    graph2tree");
  EXPECT_EQ(lines[1], "Orig          66.7");
  EXPECT_EQ(lines[2], "QR            33.3");
  EXPECT_EQ(lines[3], "");
  EXPECT_EQ(lines[4], "Attack success rate (%)");
  EXPECT_EQ(lines[6], "QR            50.0");
  EXPECT_EQ(lines[8], "Mean queries per problem");
  EXPECT_EQ(lines[10], "QR            2.33");
}

TEST(RenderReportTest, BothMethodsAndSolversAsColumns) {
  const CampaignReport first = Summarize(
      "gts", {Outcome("a", true, {{kQR, true}, {kSP, false}})}, {kQR, kSP});
  const CampaignReport second = Summarize(
      "roberta", {Outcome("a", true, {{kQR, false}, {kSP, true}})}, {kQR, kSP});
  const auto lines = Lines(RenderReport({first, second}));
  EXPECT_EQ(lines[0], "Eval       gts  roberta");
  EXPECT_EQ(lines[1], "Orig     100.0    100.0");
  EXPECT_EQ(lines[2], "QR         0.0    100.0");
  EXPECT_EQ(lines[3], "SP       100.0      0.0");
  EXPECT_EQ(lines[4], "");
}

TEST(RenderReportTest, EmptyReportIsHeaderOnly) {
  const CampaignReport empty = Summarize("s", {}, {kQR, kSP});
  EXPECT_EQ(RenderReport({empty}), "Eval         s\n");
  EXPECT_EQ(RenderReport({}), "Eval\n");
}

TEST(ReportToJsonTest, CarriesUnroundedFigures) {
  const CampaignReport report = Summarize(
      "s",
      {Outcome("a", true, {{kQR, true}}), Outcome("b", true, {{kQR, false}}),
       Outcome("c", false, {{kQR, false}})},
      {kQR});
  const nlohmann::json j = ReportToJson({report});
  ASSERT_EQ(j["solvers"].size(), 1u);
  const auto& s = j["solvers"][0];
  EXPECT_EQ(s["solver"], "s");
  EXPECT_EQ(s["evaluated"], 3);
  EXPECT_DOUBLE_EQ(s["original_accuracy"].get<double>(), 200.0 / 3);
  EXPECT_EQ(s["methods"][0]["method"], "QR");
  EXPECT_DOUBLE_EQ(s["methods"][0]["adversarial_accuracy"].get<double>(), 100.0 / 3);
  EXPECT_DOUBLE_EQ(s["methods"][0]["mean_queries"].get<double>(), 7.0 / 3);
}

}  // namespace
}  // namespace mwp
