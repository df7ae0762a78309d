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

#include "mwp/text.h"

#include <gtest/gtest.h>

#include "mwp/lexicon.h"

namespace mwp {
namespace {

std::vector<std::string> Texts(std::string_view s) {
  std::vector<std::string> out;
  for (const Token& t : Tokenize(s)) out.push_back(t.text);
  return out;
}

TEST(TokenizeTest, SplitsWordsNumbersAndPunctuation) {
  EXPECT_EQ(Texts("Tim has 5 books."),
            (std::vector<std::string>{"Tim", "has", "5", "books", "."}));
  EXPECT_EQ(Texts("It costs $2.50, or 1,200 cents?"),
            (std::vector<std::string>{"It", "costs", "$", "2.50", ",", "or",
                                      "1,200", "cents", "?"}));
}

TEST(TokenizeTest, KeepsApostrophesAndHyphensInsideWords) {
  EXPECT_EQ(Texts("Mike's well-known didn’t"),
            (std::vector<std::string>{"Mike's", "well-known", "didn’t"}));
}

TEST(TokenizeTest, OffsetsPointIntoInput) {
  const std::string s = "  Tim  has 5.";
  for (const Token& t : Tokenize(s)) {
    EXPECT_EQ(s.substr(t.begin, t.end - t.begin), t.text);
  }
}

TEST(TokenizeTest, KindsAreAssigned) {
  const auto tokens = Tokenize("5th 5 .");
  ASSERT_EQ(tokens.size(), 3u);
  EXPECT_EQ(tokens[0].kind, TokenKind::kWord);
  EXPECT_EQ(tokens[1].kind, TokenKind::kNumber);
  EXPECT_EQ(tokens[2].kind, TokenKind::kPunct);
}

TEST(TextHelpersTest, NormalizeWhitespace) {
  EXPECT_EQ(NormalizeWhitespace("  a \t b\n c  "), "a b c");
  EXPECT_EQ(NormalizeWhitespace(""), "");
}

TEST(TextHelpersTest, Possessives) {
  EXPECT_EQ(StripPossessive("Mike's"), "Mike");
  EXPECT_EQ(StripPossessive("Mike’s"), "Mike");
  EXPECT_EQ(StripPossessive("boys'"), "boys");
  EXPECT_TRUE(IsPossessive("Mike's"));
  EXPECT_FALSE(IsPossessive("Mike"));
}

TEST(TextHelpersTest, Lemma) {
  EXPECT_EQ(Lemma("books"), "book");
  EXPECT_EQ(Lemma("Berries"), "berry");
  EXPECT_EQ(Lemma("boxes"), "box");
  EXPECT_EQ(Lemma("glasses"), "glass");
  EXPECT_EQ(Lemma("bus"), "bus");
  EXPECT_EQ(Lemma("Mike's"), "mike");
  EXPECT_EQ(Lemma("book"), "book");
}

TEST(LexiconTest, NumberWords) {
  EXPECT_EQ(NumberWordValue("seven"), 7);
  EXPECT_EQ(NumberWordValue("twenty"), 20);
  EXPECT_FALSE(NumberWordValue("seventh").has_value());
}

TEST(LexiconTest, NamesAndPronouns) {
  EXPECT_EQ(LookupName("Mike"), Gender::kMale);
  EXPECT_EQ(LookupName("Gwen"), Gender::kFemale);
  EXPECT_FALSE(LookupName("will").has_value());
  EXPECT_TRUE(LookupName("Will").has_value());
  EXPECT_EQ(ClassifyPronoun("she").kind, PronounKind::kSubject);
  EXPECT_EQ(ClassifyPronoun("her").kind, PronounKind::kAmbiguousHer);
  EXPECT_TRUE(ClassifyPronoun("they").plural);
  EXPECT_EQ(ClassifyPronoun("book").kind, PronounKind::kNone);
}

}  // namespace
}  // namespace mwp
