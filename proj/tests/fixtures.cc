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

#include "fixtures.h"

#include <algorithm>
#include <array>

#include "mwp/paraphrase_attack.h"
#include "mwp/reorder_attack.h"
#include "mwp/rule_paraphraser.h"
#include "mwp/text.h"

namespace mwp::fixtures {
namespace {

constexpr std::array<const char*, 10> kFirst = {
    "Tim", "Anna", "David", "Sarah", "Jack", "Emily", "Sam", "Laura", "Ben", "Kate"};
constexpr std::array<const char*, 10> kSecond = {
    "Mike", "Lucy", "Peter", "Megan", "Tom", "Julia", "Paul", "Helen", "Mark", "Nancy"};
constexpr std::array<const char*, 5> kItems = {"books", "apples", "pencils",
                                               "marbles", "stickers"};

std::string Plus(const DatasetRecord& r) { return r.equation; }

std::string Times(const DatasetRecord& r) {
  std::string eq = r.equation;
  eq[eq.find('+')] = '*';
  return eq;
}

}  // namespace

bool SameContent(const std::string& actual, const std::string& expected,
                 const std::string& connective) {
  std::vector<std::string> a = ContentTokens(NormalizeWhitespace(actual));
  std::vector<std::string> b = ContentTokens(NormalizeWhitespace(expected));
  if (a.size() != b.size()) return false;
  const std::vector<std::string> joint = ContentTokens(connective);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) continue;
    const std::string lower = ToLower(a[i]);
    const bool is_connective =
        std::find(joint.begin(), joint.end(), lower) != joint.end();
    if (!is_connective || lower != ToLower(b[i])) return false;
  }
  return true;
}

DatasetRecord TogetherProblem(size_t index) {
  const int a = 3 + static_cast<int>(index % 7);
  const int b = 4 + static_cast<int>((index * 3) % 9);
  const std::string item = kItems[index % kItems.size()];
  DatasetRecord record;
  record.id = "c" + std::to_string(index);
  record.text = std::string(kFirst[index % kFirst.size()]) + " has " +
                std::to_string(a) + " " + item + ". " +
                kSecond[(index / 2) % kSecond.size()] + " has " +
                std::to_string(b) + " " + item + ". How many " + item +
                " do they have together?";
  record.equation = "X = " + std::to_string(a) + "+" + std::to_string(b);
  record.answer = a + b;
  record.source = DatasetSource::kCustom;
  return record;
}

CampaignFixture TwentyProblemCampaign() {
  CampaignFixture fixture;
  fixture.fallback = "X = 0";
  RuleParaphraser rules;
  for (size_t i = 0; i < 20; ++i) {
    DatasetRecord record = TogetherProblem(i);
    const MathWordProblem problem = ToProblem(record);
    const bool correct = i < 12;
    const bool qr_flips = i < 7;
    const bool sp_flips = i >= 3 && i < 12;
    if (correct) {
      auto& script = fixture.script;
      script[NormalizeWhitespace(record.text)] = Plus(record);
      script[NormalizeWhitespace(ReorderQuestion(problem))] =
          qr_flips ? Times(record) : Plus(record);
      const auto texts =
          EnumerateCombinations(BuildCandidateSets(problem, rules, 7), 1 << 20);
      for (const std::string& text : texts) {
        script[NormalizeWhitespace(text)] = sp_flips ? Times(record) : Plus(record);
      }
    }
    fixture.records.push_back(std::move(record));
  }
  return fixture;
}

std::vector<DatasetRecord> FixtureCorpus() {
  std::vector<DatasetRecord> corpus = {
      {"t1", kBooks, "X = 5+7", 12, DatasetSource::kMaWPS}};
  for (DatasetRecord& r : TwentyProblemCampaign().records) corpus.push_back(r);
  const std::map<std::string, std::pair<std::string, int>> gold = {
      {"teacher", {"X = 7-3+4", 8}},
      {"gwen", {"X = 20*(10-3)", 140}},
      {"dennis", {"X = 12/3", 4}},
      {"oliver", {"X = (10-4)/3", 2}},
  };
  for (const ReorderCase& c : ReorderCases()) {
    const auto& [equation, answer] = gold.at(c.name);
    corpus.push_back({c.name, c.original, equation, answer, DatasetSource::kASDivA});
  }
  return corpus;
}

nlohmann::json FixtureSolverScript() {
  const CampaignFixture twenty = TwentyProblemCampaign();
  nlohmann::json script(twenty.script);
  script[kBooks] = "X = 5+7";
  script[kBooksReordered] = "X = 5+7";
  return {{"name", "scripted"}, {"fallback", twenty.fallback}, {"script", script}};
}

}  // namespace mwp::fixtures
