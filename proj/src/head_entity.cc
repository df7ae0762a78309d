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
#include "mwp/paraphrase_attack.h"

namespace mwp {
namespace {

constexpr std::array<std::string_view, 7> kSubjectPronouns = {
    "he", "i", "it", "she", "they", "we", "you"};

bool IsBoundary(const Token& token) {
  return token.IsPunct('.') || token.IsPunct(',') || token.IsPunct(';') ||
         token.IsPunct(':') || token.IsPunct('?') || token.IsPunct('!');
}

bool IsNounLike(const Token& token) {
  if (token.kind != TokenKind::kWord) return false;
  const std::string lower = ToLower(StripPossessive(token.text));
  if (IsFunctionWord(lower) || IsModifierWord(lower) || IsCommonVerb(lower) ||
      NumberWordValue(lower)) {
    return false;
  }
  if (lower.ends_with("n't") || lower.ends_with("n\xE2\x80\x99t")) return false;
  // Past participles and adverbs ("turned", "quickly").
  if (lower.size() > 4 && lower.ends_with("ed") && !lower.ends_with("eed")) {
    return false;
  }
  if (lower.size() > 4 && lower.ends_with("ly")) return false;
  return true;
}

bool IsQuantityToken(const Sentence& sentence, size_t index) {
  for (const QuantityMention& q : sentence.quantities) {
    if (index >= q.token_begin && index < q.token_end) return true;
  }
  return false;
}

bool IsNameAt(const Sentence& sentence, size_t index) {
  const Token& token = sentence.tokens[index];
  if (!HasNameShape(token)) return false;
  return FirstWordIndex(sentence) != index ||
         LookupName(StripPossessive(token.text)).has_value();
}

std::string NameLemma(const Token& token) {
  return ToLower(StripPossessive(token.text));
}

std::string EntityFor(const Sentence& sentence, const QuantityMention& q) {
  const auto& tokens = sentence.tokens;
  if (q.token_begin > 0) {
    const Token& before = tokens[q.token_begin - 1];
    if (before.IsPunct('$')) return "dollar";
  }
  if (q.token_end < tokens.size() && tokens[q.token_end].IsPunct('%')) {
    return "percent";
  }
  for (size_t j = q.token_end; j < tokens.size(); ++j) {
    if (IsBoundary(tokens[j]) || IsQuantityToken(sentence, j)) break;
    if (IsNounLike(tokens[j])) return Lemma(tokens[j].text);
  }
  for (size_t j = q.token_begin; j-- > 0;) {
    if (IsBoundary(tokens[j]) || IsQuantityToken(sentence, j)) break;
    if (IsNounLike(tokens[j])) return Lemma(tokens[j].text);
  }
  return "";
}

std::string SubjectFor(const Sentence& sentence, const QuantityMention& q) {
  const auto& tokens = sentence.tokens;
  for (size_t i = 0; i < q.token_begin; ++i) {
    if (IsNameAt(sentence, i)) return NameLemma(tokens[i]);
  }
  // A common-noun subject precedes every quantity of its clause; words
  // between two quantities belong to the first one's phrase.
  const size_t clause_head = sentence.quantities.front().token_begin;
  for (size_t i = 0; i < clause_head; ++i) {
    if (tokens[i].kind != TokenKind::kWord) continue;
    const std::string lower = ToLower(tokens[i].text);
    if (std::find(kSubjectPronouns.begin(), kSubjectPronouns.end(), lower) !=
        kSubjectPronouns.end()) {
      return lower;
    }
    if (IsNounLike(tokens[i])) return Lemma(tokens[i].text);
  }
  for (const Token& token : tokens) {
    if (token.kind != TokenKind::kWord || !IsPossessive(token.text)) continue;
    const std::string stem = ToLower(StripPossessive(token.text));
    if (IsFunctionWord(stem)) continue;
    return HasNameShape(token) ? stem : Lemma(stem);
  }
  for (size_t i = q.token_end; i < tokens.size(); ++i) {
    if (IsNameAt(sentence, i)) return NameLemma(tokens[i]);
  }
  return "";
}

}  // namespace

std::vector<HeadEntity> ExtractHeadEntities(const Sentence& sentence) {
  std::vector<HeadEntity> out;
  for (const QuantityMention& q : sentence.quantities) {
    out.push_back({q.value, EntityFor(sentence, q), SubjectFor(sentence, q)});
  }
  return out;
}

CandidateSet FilterCandidates(const Sentence& original,
                              const std::vector<std::string>& raw_candidates,
                              size_t sentence_index) {
  const std::vector<Rational> values = QuantityValues(original.text);
  const std::vector<HeadEntity> heads = ExtractHeadEntities(original);
  const auto questions = std::count(original.text.begin(),
                                    original.text.end(), '?');
  const std::string original_key = NormalizeWhitespace(original.text);

  CandidateSet set;
  set.sentence_index = sentence_index;
  std::vector<std::string> seen = {original_key};
  for (const std::string& raw : raw_candidates) {
    const std::string key = NormalizeWhitespace(raw);
    if (key.empty()) continue;
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    if (std::count(raw.begin(), raw.end(), '?') != questions) continue;
    const Sentence candidate = MakeSentence(raw);
    if (QuantityValues(raw) != values) continue;
    const std::vector<HeadEntity> candidate_heads =
        ExtractHeadEntities(candidate);
    const bool all_matched = std::all_of(
        heads.begin(), heads.end(), [&](const HeadEntity& head) {
          return std::find(candidate_heads.begin(), candidate_heads.end(),
                           head) != candidate_heads.end();
        });
    if (!all_matched) continue;
    seen.push_back(key);
    set.candidates.push_back(raw);
  }
  set.candidates.push_back(original.text);
  return set;
}

}  // namespace mwp
