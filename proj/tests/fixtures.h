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

// Problem texts shared by the unit tests and the acceptance binary.

#ifndef MWP_TESTS_FIXTURES_H_
#define MWP_TESTS_FIXTURES_H_

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "mwp/dataset.h"

namespace mwp::fixtures {

inline constexpr const char* kBooks =
    "Tim has 5 books. Mike has 7 books. How many books do they have together?";
inline constexpr const char* kBooksReordered =
    "How many books do they have together given that Tim has 5 books and "
    "Mike has 7 books.";
inline constexpr const char* kBooksParaphrased =
    "Tim has got 5 books. There are 7 books in Mike's possession. How many "
    "books do they have?";

struct ReorderCase {
  std::string name;
  std::string original;
  std::string expected;
};

// The four worked reorderings, punctuation detached as in the originals.
inline std::vector<ReorderCase> ReorderCases() {
  return {
      {"teacher",
       "A teacher had 7 worksheets to grade . If she graded 3 , but then "
       "another 4 were turned in, how many worksheets would she have to "
       "grade ?",
       "How many worksheets would she have to grade given that a teacher had 7 "
       "worksheets to grade and if she graded 3 but then another 4 were turned "
       "in?"},
      {"gwen",
       "Gwen earned 20 points for each bag of cans she recycled . If she had 10 "
       "bags, but didn’t recycle 3 of them , how many points would she "
       "have earned ?",
       "How many points would she have earned given that Gwen earned 20 points "
       "for each bag of cans she recycled and if she had 10 bags but "
       "didn’t recycle 3 of them ?"},
      {"dennis",
       "Dennis has 12 pencils stored in boxes. If there are 3 boxes, how many "
       "pencils must go in each box?",
       "If there are 3 boxes, how many pencils must go in each box given that "
       "Dennis has 12 pencils stored in boxes ?"},
      {"oliver",
       "Oliver made 10 dollars mowing lawns over the summer . If he spent 4 "
       "dollars buying new mower blades. How many 3 dollar games could he buy "
       "with the money he had left ?",
       "How many 3 dollar games could Oliver buy with the money he had left "
       "given that Oliver made 10 dollars mowing lawns over the summer and if "
       "he spent 4 dollars buying new mower blades."},
  };
}

// Invalid paraphrases paired with the sentence they replace.
struct FilterCase {
  std::string problem;
  size_t sentence_index;
  std::string candidate;
  bool valid;
};

inline std::vector<FilterCase> FilterCases() {
  const std::string vase =
      "A vase can hold 10 flowers . If you had 5 carnations and 5 roses, how "
      "many vases would you need to hold the flowers?";
  const std::string tailor =
      "A tailor cut 15 of an inch off a skirt and 5 of an inch off a pair of "
      "pants . How much more did the tailor cut off the skirt than the pants ?";
  return {
      {vase, 1, "If you had 5 and 5 roses. How many vases do you need to hold "
                "the flowers?", false},
      {vase, 1, "If you had 5 and 5 roses, how many vases would you need to "
                "hold the flowers?", false},
      {tailor, 0, "The 15 was cut by a tailor. There is a skirt and 5 of an "
                  "inch off. There is a pair of pants.", false},
      {kBooks, 0, "Tim has got 5 books.", true},
      {kBooks, 1, "There are 7 books in Mike's possession.", true},
      {kBooks, 2, "How many books do they have?", true},
  };
}

// Content tokens compared case-insensitively on the connective only.
bool SameContent(const std::string& actual, const std::string& expected,
                 const std::string& connective = "given that");

// A problem "A has x items. B has y items. How many items do they have
// together?" for every index, with varied names, items and counts.
DatasetRecord TogetherProblem(size_t index);

// Scripted campaign over 20 such problems: 12 answered correctly, QR flips
// 7 of those and SP flips 9. Returns the solver script.
struct CampaignFixture {
  std::vector<DatasetRecord> records;
  std::map<std::string, std::string> script;
  std::string fallback;
};
CampaignFixture TwentyProblemCampaign();

// The corpus under tests/data: the books problem, the twenty problems above
// and the four reordering problems with their gold equations.
std::vector<DatasetRecord> FixtureCorpus();

// Solver script for FixtureCorpus in the LoadScriptedSolver file shape.
nlohmann::json FixtureSolverScript();

}  // namespace mwp::fixtures

#endif  // MWP_TESTS_FIXTURES_H_
