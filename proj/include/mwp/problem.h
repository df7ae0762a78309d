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

#ifndef MWP_PROBLEM_H_
#define MWP_PROBLEM_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mwp/rational.h"
#include "mwp/text.h"

namespace mwp {

// A numeric value in a sentence. [token_begin, token_end) indexes the
// sentence's tokens.
struct QuantityMention {
  Rational value;
  std::string surface;
  size_t token_begin = 0;
  size_t token_end = 0;

  friend bool operator==(const QuantityMention&, const QuantityMention&) = default;
};

struct Sentence {
  std::string text;
  std::vector<Token> tokens;
  std::vector<QuantityMention> quantities;

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

// Tokenizes `text` and collects its quantities.
Sentence MakeSentence(std::string_view text);

struct MathWordProblem {
  std::string id;
  std::string raw_text;
  std::vector<Sentence> body;
  Sentence question;
  std::optional<std::string> gold_equation;
  std::optional<Rational> gold_answer;

  size_t token_count() const;
  // Body sentences followed by the question.
  std::vector<const Sentence*> sentences() const;
};

// Splits on '.', '?', '!'. A period does not end a sentence when it follows a
// single capital initial or a known abbreviation, or when the next word starts
// lowercase. Decimal points never split because "1.5" is one token.
// Throws Error(kEmptyInput) on blank input.
std::vector<Sentence> SegmentText(std::string_view raw);

// Interrogative/imperative openers used when no sentence ends in '?'.
inline const std::vector<std::string>& DefaultQuestionCues() {
  static const std::vector<std::string> cues = {"how", "what", "find", "if"};
  return cues;
}

struct QuestionSplit {
  std::vector<Sentence> body;
  Sentence question;
};

// The question is the last sentence ending in '?', otherwise the last
// sentence opening with one of `cues`. Throws Error(kNoQuestionFound).
QuestionSplit IdentifyQuestion(std::vector<Sentence> sentences,
                               const std::vector<std::string>& cues =
                                   DefaultQuestionCues());

std::vector<QuantityMention> ExtractQuantities(std::string_view text);

// Capitalized word that is not "I", a function word or a number word.
bool HasNameShape(const Token& token);

// Index of the first non-punctuation token.
std::optional<size_t> FirstWordIndex(const Sentence& sentence);

// Values only, sorted; convenient for multiset comparison.
std::vector<Rational> QuantityValues(std::string_view text);

std::string Reassemble(const std::vector<Sentence>& body,
                       const Sentence& question);

MathWordProblem ParseProblem(std::string id, std::string_view raw,
                             std::optional<std::string> gold_equation = {},
                             std::optional<Rational> gold_answer = {},
                             const std::vector<std::string>& cues =
                                 DefaultQuestionCues());

}  // namespace mwp

#endif  // MWP_PROBLEM_H_
