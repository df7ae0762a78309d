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

#include <algorithm>
#include <array>

#include "mwp/lexicon.h"
#include "mwp/reorder_attack.h"

namespace mwp {
namespace {

constexpr std::array<std::string_view, 8> kInterrogatives = {
    "how", "what", "which", "find", "who", "when", "where", "why"};

struct Antecedent {
  std::string name;
  Gender gender;
};

bool Compatible(Gender pronoun, Gender name) {
  return name == Gender::kUnknown || pronoun == Gender::kUnknown ||
         pronoun == name;
}

struct Replacement {
  size_t begin;
  size_t end;
  std::string text;
};

}  // namespace

NameIndex::NameIndex(const MathWordProblem& problem) {
  for (const Sentence* sentence : problem.sentences()) {
    const auto first = FirstWordIndex(*sentence);
    for (size_t i = 0; i < sentence->tokens.size(); ++i) {
      if (first && i == *first) continue;
      const Token& token = sentence->tokens[i];
      if (HasNameShape(token)) {
        mid_sentence_names_.insert(std::string(StripPossessive(token.text)));
      }
    }
  }
}

bool NameIndex::IsProperNoun(const Sentence& sentence,
                             size_t token_index) const {
  const Token& token = sentence.tokens[token_index];
  if (!HasNameShape(token)) return false;
  const std::string stem(StripPossessive(token.text));
  if (LookupName(stem) || mid_sentence_names_.count(stem) > 0) return true;
  return FirstWordIndex(sentence) != token_index;
}

std::optional<LeadingConditional> FindLeadingConditional(
    const Sentence& question) {
  const auto first = FirstWordIndex(question);
  if (!first || ToLower(question.tokens[*first].text) != "if") {
    return std::nullopt;
  }
  const auto& tokens = question.tokens;
  for (size_t j = *first + 2; j < tokens.size(); ++j) {
    if (tokens[j].kind != TokenKind::kWord || !tokens[j - 1].IsPunct(',')) {
      continue;
    }
    const std::string lower = ToLower(tokens[j].text);
    if (std::find(kInterrogatives.begin(), kInterrogatives.end(), lower) ==
        kInterrogatives.end()) {
      continue;
    }
    LeadingConditional split;
    split.comma_token = j - 1;
    split.main_begin_token = j;
    split.existential = *first + 1 < tokens.size() &&
                        ToLower(tokens[*first + 1].text) == "there";
    return split;
  }
  return std::nullopt;
}

CorefResult ResolveCoreferences(const MathWordProblem& problem,
                                const CorefOptions& options) {
  CorefResult result{problem, {}};
  const Sentence& question = problem.question;
  if (FindLeadingConditional(question)) return result;

  const NameIndex names(problem);
  std::vector<Antecedent> antecedents;
  for (const Sentence& sentence : problem.body) {
    for (size_t i = 0; i < sentence.tokens.size(); ++i) {
      if (!names.IsProperNoun(sentence, i)) continue;
      const std::string name(StripPossessive(sentence.tokens[i].text));
      antecedents.push_back({name, LookupName(name).value_or(Gender::kUnknown)});
    }
  }

  std::vector<Replacement> replacements;
  std::set<std::string> already_named;
  std::vector<Antecedent> question_names;
  const auto& tokens = question.tokens;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (names.IsProperNoun(question, i)) {
      const std::string name(StripPossessive(tokens[i].text));
      question_names.push_back(
          {name, LookupName(name).value_or(Gender::kUnknown)});
      continue;
    }
    if (tokens[i].kind != TokenKind::kWord) continue;
    const PronounInfo pronoun = ClassifyPronoun(ToLower(tokens[i].text));
    if (pronoun.kind == PronounKind::kNone || pronoun.plural) continue;

    // A compatible name earlier in the question already anchors the pronoun.
    const bool anchored = std::any_of(
        question_names.begin(), question_names.end(),
        [&](const Antecedent& a) { return Compatible(pronoun.gender, a.gender); });
    if (anchored) continue;

    auto it = std::find_if(antecedents.rbegin(), antecedents.rend(),
                           [&](const Antecedent& a) {
                             return Compatible(pronoun.gender, a.gender);
                           });
    if (it == antecedents.rend()) {
      result.unresolved.push_back(tokens[i].text);
      continue;
    }
    if (!options.all_mentions && already_named.count(it->name) > 0) continue;
    already_named.insert(it->name);

    bool possessive = pronoun.kind == PronounKind::kPossessive;
    if (pronoun.kind == PronounKind::kAmbiguousHer && i + 1 < tokens.size()) {
      const Token& next = tokens[i + 1];
      possessive = next.kind == TokenKind::kWord &&
                   !IsFunctionWord(ToLower(next.text));
    }
    replacements.push_back({tokens[i].begin, tokens[i].end,
                            possessive ? it->name + "'s" : it->name});
  }

  if (replacements.empty()) return result;
  std::string text = question.text;
  for (auto r = replacements.rbegin(); r != replacements.rend(); ++r) {
    text.replace(r->begin, r->end - r->begin, r->text);
  }
  result.problem.question = MakeSentence(text);
  result.problem.raw_text =
      Reassemble(result.problem.body, result.problem.question);
  return result;
}

}  // namespace mwp
