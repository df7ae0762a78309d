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

#ifndef MWP_LEXICON_H_
#define MWP_LEXICON_H_

#include <optional>
#include <string_view>

namespace mwp {

// Small closed-class word lists used by the rule-based text components.
// All lookups expect lowercase ASCII input.

// zero..twenty plus the tens (thirty..ninety).
std::optional<int> NumberWordValue(std::string_view lower);

// Determiners, pronouns, prepositions, conjunctions, auxiliaries, modals,
// wh-words and common sentence adverbs.
bool IsFunctionWord(std::string_view lower);

// Common descriptive adjectives and quantifiers that sit between a number and
// the noun it counts ("5 red apples").
bool IsModifierWord(std::string_view lower);

// Frequent verbs that could otherwise be mistaken for a noun head.
bool IsCommonVerb(std::string_view lower);

enum class Gender { kMale, kFemale, kUnknown };

// First names seen in English word-problem corpora. Lookup is case-insensitive
// on the first letter only: "Tim" and "tim" both resolve.
std::optional<Gender> LookupName(std::string_view word);

enum class PronounKind { kNone, kSubject, kObject, kPossessive, kAmbiguousHer };

struct PronounInfo {
  PronounKind kind = PronounKind::kNone;
  Gender gender = Gender::kUnknown;
  bool plural = false;
};

// Third-person personal pronouns (he/him/his/she/her/they/them/their).
PronounInfo ClassifyPronoun(std::string_view lower);

}  // namespace mwp

#endif  // MWP_LEXICON_H_
