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

#include <algorithm>
#include <array>
#include <cctype>

#include "mwp/error.h"
#include "mwp/lexicon.h"

namespace mwp {
namespace {

constexpr std::array<std::string_view, 14> kAbbreviations = {
    "dr", "etc", "jr", "mr", "mrs", "ms", "no", "prof", "sr", "st", "vs",
    "approx", "ft", "oz"};

bool IsTerminator(const Token& token) {
  return token.IsPunct('.') || token.IsPunct('?') || token.IsPunct('!');
}

bool IsClosingPunct(const Token& token) {
  return token.IsPunct('"') || token.IsPunct(')') || token.IsPunct('\'') ||
         token.text == "\xE2\x80\x9D" || token.text == "\xE2\x80\x99";
}

bool PeriodEndsSentence(const std::vector<Token>& tokens, size_t i) {
  if (i > 0 && tokens[i - 1].end == tokens[i].begin &&
      tokens[i - 1].kind == TokenKind::kWord) {
    const std::string& prev = tokens[i - 1].text;
    if (prev.size() == 1 && StartsUpper(prev)) return false;
    const std::string lower = ToLower(prev);
    if (std::find(kAbbreviations.begin(), kAbbreviations.end(), lower) !=
        kAbbreviations.end()) {
      return false;
    }
  }
  for (size_t j = i + 1; j < tokens.size(); ++j) {
    if (tokens[j].kind == TokenKind::kPunct) continue;
    const unsigned char first = tokens[j].text[0];
    return !std::islower(first);
  }
  return true;
}

}  // namespace

size_t MathWordProblem::token_count() const {
  size_t count = question.tokens.size();
  for (const Sentence& s : body) count += s.tokens.size();
  return count;
}

std::vector<const Sentence*> MathWordProblem::sentences() const {
  std::vector<const Sentence*> out;
  for (const Sentence& s : body) out.push_back(&s);
  out.push_back(&question);
  return out;
}

std::vector<QuantityMention> ExtractQuantities(std::string_view text) {
  std::vector<QuantityMention> out;
  const std::vector<Token> tokens = Tokenize(text);
  for (size_t i = 0; i < tokens.size(); ++i) {
    const Token& token = tokens[i];
    if (token.kind == TokenKind::kNumber) {
      if (auto value = ParseRational(token.text)) {
        out.push_back({*value, token.text, i, i + 1});
      }
    } else if (token.kind == TokenKind::kWord) {
      if (auto value = NumberWordValue(ToLower(token.text))) {
        out.push_back({Rational(*value), token.text, i, i + 1});
      }
    }
  }
  return out;
}

std::vector<Rational> QuantityValues(std::string_view text) {
  std::vector<Rational> values;
  for (const QuantityMention& q : ExtractQuantities(text)) {
    values.push_back(q.value);
  }
  std::sort(values.begin(), values.end());
  return values;
}

bool HasNameShape(const Token& token) {
  if (token.kind != TokenKind::kWord || !StartsUpper(token.text)) return false;
  const std::string_view stem = StripPossessive(token.text);
  if (stem == "I") return false;
  const std::string lower = ToLower(stem);
  return !IsFunctionWord(lower) && !NumberWordValue(lower);
}

std::optional<size_t> FirstWordIndex(const Sentence& sentence) {
  for (size_t i = 0; i < sentence.tokens.size(); ++i) {
    if (sentence.tokens[i].kind != TokenKind::kPunct) return i;
  }
  return std::nullopt;
}

Sentence MakeSentence(std::string_view text) {
  Sentence sentence;
  sentence.text = std::string(text);
  sentence.tokens = Tokenize(text);
  sentence.quantities = ExtractQuantities(text);
  return sentence;
}

std::vector<Sentence> SegmentText(std::string_view raw) {
  const std::vector<Token> tokens = Tokenize(raw);
  if (tokens.empty()) throw Error(ErrorCode::kEmptyInput, "blank problem text");

  std::vector<Sentence> sentences;
  size_t start = 0;
  auto flush = [&](size_t last) {
    sentences.push_back(MakeSentence(
        raw.substr(tokens[start].begin, tokens[last].end - tokens[start].begin)));
    start = last + 1;
  };
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (!IsTerminator(tokens[i])) continue;
    if (tokens[i].IsPunct('.') && !PeriodEndsSentence(tokens, i)) continue;
    size_t last = i;
    while (last + 1 < tokens.size() &&
           (IsTerminator(tokens[last + 1]) || IsClosingPunct(tokens[last + 1]))) {
      ++last;
    }
    flush(last);
    i = last;
  }
  if (start < tokens.size()) flush(tokens.size() - 1);
  return sentences;
}

QuestionSplit IdentifyQuestion(std::vector<Sentence> sentences,
                               const std::vector<std::string>& cues) {
  if (sentences.empty()) {
    throw Error(ErrorCode::kNoQuestionFound, "no sentences");
  }
  auto ends_with_question = [](const Sentence& s) {
    for (auto it = s.tokens.rbegin(); it != s.tokens.rend(); ++it) {
      if (it->IsPunct('?')) return true;
      if (!IsClosingPunct(*it)) return false;
    }
    return false;
  };
  auto opens_with_cue = [&](const Sentence& s) {
    for (const Token& token : s.tokens) {
      if (token.kind == TokenKind::kPunct) continue;
      const std::string lower = ToLower(token.text);
      return std::find(cues.begin(), cues.end(), lower) != cues.end();
    }
    return false;
  };

  std::optional<size_t> index;
  for (size_t i = sentences.size(); i-- > 0;) {
    if (ends_with_question(sentences[i])) {
      index = i;
      break;
    }
  }
  if (!index) {
    for (size_t i = sentences.size(); i-- > 0;) {
      if (opens_with_cue(sentences[i])) {
        index = i;
        break;
      }
    }
  }
  if (!index) {
    throw Error(ErrorCode::kNoQuestionFound,
                "no sentence ends in '?' or opens with a question cue");
  }
  QuestionSplit split;
  split.question = std::move(sentences[*index]);
  for (size_t i = 0; i < sentences.size(); ++i) {
    if (i != *index) split.body.push_back(std::move(sentences[i]));
  }
  return split;
}

std::string Reassemble(const std::vector<Sentence>& body,
                       const Sentence& question) {
  std::string out;
  for (const Sentence& s : body) {
    out += s.text;
    out += ' ';
  }
  out += question.text;
  return out;
}

MathWordProblem ParseProblem(std::string id, std::string_view raw,
                             std::optional<std::string> gold_equation,
                             std::optional<Rational> gold_answer,
                             const std::vector<std::string>& cues) {
  QuestionSplit split = IdentifyQuestion(SegmentText(raw), cues);
  MathWordProblem problem;
  problem.id = std::move(id);
  problem.raw_text = std::string(raw);
  problem.body = std::move(split.body);
  problem.question = std::move(split.question);
  problem.gold_equation = std::move(gold_equation);
  problem.gold_answer = std::move(gold_answer);
  return problem;
}

}  // namespace mwp
