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

#include "mwp/problem.h"

#include <gtest/gtest.h>

#include <random>

#include "fixtures.h"
#include "mwp/error.h"

namespace mwp {
namespace {

std::vector<std::string> Texts(const std::vector<Sentence>& sentences) {
  std::vector<std::string> out;
  for (const Sentence& s : sentences) out.push_back(s.text);
  return out;
}

TEST(SegmentTextTest, BooksProblem) {
  EXPECT_EQ(Texts(SegmentText(fixtures::kBooks)),
            (std::vector<std::string>{"Tim has 5 books.", "Mike has 7 books.",
                                      "How many books do they have together?"}));
}

TEST(SegmentTextTest, DecimalsInitialsAndAbbreviationsDoNotSplit) {
  EXPECT_EQ(SegmentText("Mr. Lee paid 2.50 dollars. J. Smith paid 3.").size(), 2u);
  EXPECT_EQ(SegmentText("He has 3 apples . She has 2 .").size(), 2u);
}

TEST(SegmentTextTest, TrailingTextWithoutTerminatorIsASentence) {
  EXPECT_EQ(Texts(SegmentText("Tim has 5 books. How many books")),
            (std::vector<std::string>{"Tim has 5 books.", "How many books"}));
}

TEST(SegmentTextTest, PeriodBeforeLowercaseWordDoesNotSplit) {
  EXPECT_EQ(SegmentText("He walked 3 mi. to school. How far?").size(), 2u);
}

TEST(SegmentTextTest, BlankInputThrows) {
  try {
    SegmentText("  \n ");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyInput);
  }
}

// Segmentation loses nothing: the sentences cover every token in order.
TEST(SegmentTextTest, PartitionsTokens) {
  const std::vector<std::string> words = {"Tim", "has", "5", "books", ".", "?",
                                          "!", ",", "Mr.", "2.5", "and", "A."};
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    std::string text;
    const int n = std::uniform_int_distribution<int>(1, 20)(rng);
    for (int k = 0; k < n; ++k) {
      text += words[std::uniform_int_distribution<size_t>(0, words.size() - 1)(rng)];
      text += ' ';
    }
    std::vector<std::string> joined;
    for (const Sentence& s : SegmentText(text)) {
      for (const Token& t : s.tokens) joined.push_back(t.text);
    }
    std::vector<std::string> direct;
    for (const Token& t : Tokenize(text)) direct.push_back(t.text);
    EXPECT_EQ(joined, direct) << text;
  }
}

TEST(IdentifyQuestionTest, PicksLastSentenceEndingInQuestionMark) {
  const QuestionSplit split = IdentifyQuestion(SegmentText(fixtures::kBooks));
  EXPECT_EQ(split.question.text, "How many books do they have together?");
  EXPECT_EQ(split.body.size(), 2u);
}

TEST(IdentifyQuestionTest, FallsBackToCueWord) {
  const QuestionSplit split =
      IdentifyQuestion(SegmentText("Tim has 5 books. Find the total. Mike is here."));
  EXPECT_EQ(split.question.text, "Find the total.");
  EXPECT_EQ(Texts(split.body),
            (std::vector<std::string>{"Tim has 5 books.", "Mike is here."}));
}

TEST(IdentifyQuestionTest, NoQuestionThrows) {
  try {
    IdentifyQuestion(SegmentText("Tim has 5 books. Mike has 7 books."));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoQuestionFound);
  }
}

TEST(ExtractQuantitiesTest, DigitsWordsAndSeparators) {
  const auto q = ExtractQuantities("He had 1,200 coins, two boxes and 2.5 kg.");
  ASSERT_EQ(q.size(), 3u);
  EXPECT_EQ(q[0].value, 1200);
  EXPECT_EQ(q[1].value, 2);
  EXPECT_EQ(q[1].surface, "two");
  EXPECT_EQ(q[2].value, Rational(5, 2));
}

TEST(ExtractQuantitiesTest, QuantityValuesAreSorted) {
  EXPECT_EQ(QuantityValues("7 and 5 and 7"),
            (std::vector<Rational>{5, 7, 7}));
}

TEST(ParseProblemTest, CarriesGold) {
  const MathWordProblem p =
      ParseProblem("t1", fixtures::kBooks, "X = 5+7", Rational(12));
  EXPECT_EQ(p.id, "t1");
  EXPECT_EQ(p.body.size(), 2u);
  EXPECT_EQ(*p.gold_answer, 12);
  EXPECT_EQ(p.sentences().size(), 3u);
  EXPECT_EQ(p.token_count(), 18u);
}

TEST(ReassembleTest, JoinsWithSingleSpaces) {
  const MathWordProblem p = ParseProblem("t1", fixtures::kBooks);
  EXPECT_EQ(Reassemble(p.body, p.question), fixtures::kBooks);
}

}  // namespace
}  // namespace mwp
