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

#include "mwp/lexicon.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <string>

namespace mwp {
namespace {

template <size_t N>
bool Contains(const std::array<std::string_view, N>& sorted,
              std::string_view word) {
  return std::binary_search(sorted.begin(), sorted.end(), word);
}

template <size_t N>
constexpr bool IsSorted(const std::array<std::string_view, N>& words) {
  for (size_t i = 1; i < N; ++i) {
    if (!(words[i - 1] < words[i])) return false;
  }
  return true;
}

constexpr std::array<std::string_view, 21> kUnits = {
    "zero",    "one",     "two",       "three",    "four",     "five",
    "six",     "seven",   "eight",     "nine",     "ten",      "eleven",
    "twelve",  "thirteen", "fourteen", "fifteen",  "sixteen",  "seventeen",
    "eighteen", "nineteen", "twenty"};

constexpr std::array<std::string_view, 7> kTens = {
    "thirty", "forty", "fifty", "sixty", "seventy", "eighty", "ninety"};

constexpr std::array kFunctionWords = std::to_array<std::string_view>({
    "a",       "about",   "above",   "after",   "again",   "all",
    "also",    "altogether", "am",   "among",   "an",      "and",
    "another", "any",     "are",     "around",  "as",      "at",
    "be",      "been",    "before",  "behind",  "being",   "below",
    "besides", "between", "both",    "but",     "by",      "can",
    "could",   "did",     "didn't",  "do",      "does",    "doesn't",
    "don't",   "down",    "during",  "each",    "either",  "every",
    "find",    "for",     "from",    "had",     "has",     "have",
    "having",  "he",      "her",     "hers",    "herself", "him",
    "himself", "his",     "how",     "i",       "if",      "in",
    "inside",  "into",    "is",      "it",      "its",     "itself",
    "just",    "many",    "may",     "me",      "might",   "mine",
    "much",    "must",    "my",      "near",    "neither", "next",
    "no",      "nor",     "not",     "now",     "of",      "off",
    "on",      "once",    "only",    "onto",    "or",      "our",
    "ours",    "out",    "outside",  "over",    "per",     "shall",
    "she",     "should",  "since",   "so",      "some",    "still",
    "such",    "than",    "that",    "the",     "their",   "theirs",
    "them",    "then",    "there",   "these",   "they",    "this",
    "those",   "through", "thus",    "till",    "to",      "together",
    "too",     "toward",  "towards", "under",   "until",   "up",
    "upon",    "us",      "very",    "was",     "wasn't",  "we",
    "were",    "weren't", "what",    "when",    "where",   "whereas",
    "whether", "which",   "while",   "who",     "whom",    "whose",
    "why",     "will",    "with",    "within",  "without", "would",
    "yet",     "you",     "your",    "yours",
});

constexpr std::array kModifiers = std::to_array<std::string_view>({
    "additional", "big",    "black",   "blue",   "brown",  "different",
    "empty",      "extra",  "few",     "fewer",  "full",   "gold",
    "golden",     "gray",   "green",   "grey",   "half",   "huge",
    "large",      "least",  "less",    "little", "long",   "more",
    "most",       "new",    "old",     "orange", "other",  "pink",
    "purple",     "red",    "remaining", "same", "several", "short",
    "silver",     "small",  "tall",    "tiny",   "total",  "white",
    "whole",      "yellow", "young",
});

constexpr std::array kVerbs = std::to_array<std::string_view>({
    "ate",    "bake",   "baked",  "bought", "buy",    "buys",   "came",
    "cost",   "costs",  "cut",    "eat",    "eats",   "exist",  "exists",
    "gave",   "get",    "gets",   "give",   "gives",  "go",     "goes",
    "got",    "grew",   "held",   "hold",   "holds",  "keep",   "kept",
    "left",   "lost",   "made",   "make",   "makes",  "need",   "needs",
    "paid",   "pay",    "put",    "ran",    "read",   "run",    "said",
    "saw",    "see",    "sell",   "sells",  "sent",   "sold",   "spend",
    "spends", "spent",  "take",   "takes",  "took",   "use",    "uses",
    "want",   "wants",  "went",   "won",    "wrote",
});

constexpr std::array kMaleNames = std::to_array<std::string_view>({
    "adam",    "alan",    "albert",  "alex",    "andrew",  "andy",
    "arthur",  "ben",     "benny",   "bill",    "billy",   "bob",
    "brian",   "carl",    "charles", "dan",     "daniel",
    "dave",    "david",   "dennis",  "donald",  "ed",      "edward",
    "eric",    "frank",   "fred",    "gary",    "george",  "greg",
    "harry",   "henry",   "jack",    "jacob",   "jake",    "james",
    "jason",   "jeff",    "jerry",   "jim",     "joe",     "john",
    "jose",    "joseph",  "josh",    "keith",   "ken",     "kevin",
    "larry",   "luke",    "mark",    "matt",    "max",     "michael",
    "mike",    "nick",    "oliver",  "paul",    "pete",    "peter",
    "phil",    "ralph",   "richard", "rick",    "robert",  "roger",
    "ron",     "ryan",    "scott",   "steve",   "steven",  "ted",
    "thomas",  "tim",     "todd",    "tom",     "tony",    "will",
    "william", "zach",
});

constexpr std::array kFemaleNames = std::to_array<std::string_view>({
    "alice",    "alyssa",  "amanda",  "amy",      "angela",  "ann",
    "anna",     "annie",   "barbara", "beth",     "betty",   "carol",
    "caroline", "carrie",  "cathy",   "christine", "claire", "connie",
    "diane",    "donna",   "dora",    "edith",    "ella",    "ellen",
    "emily",    "emma",    "faye",    "gina",     "grace",   "gwen",
    "haley",    "hannah",  "helen",   "jane",     "janet",   "jenny",
    "jessica",  "jill",    "joan",    "julia",    "julie",   "karen",
    "kate",     "katie",   "kim",      "laura",   "linda",
    "lisa",     "lucy",    "maria",   "mary",     "megan",   "melanie",
    "melissa",  "nancy",   "nicole",  "olivia",   "paige",   "pam",
    "rachel",   "rebecca", "rose",    "ruth",     "sally",   "sandy",
    "sara",     "sarah",   "sue",     "susan",    "tina",    "wendy",
});

constexpr std::array kNeutralNames = std::to_array<std::string_view>({
    "alexis", "casey", "chris", "jamie", "jordan", "kelly", "pat", "robin",
    "sam",    "taylor",
});

static_assert(IsSorted(kFunctionWords));
static_assert(IsSorted(kModifiers));
static_assert(IsSorted(kVerbs));
static_assert(IsSorted(kMaleNames));
static_assert(IsSorted(kFemaleNames));
static_assert(IsSorted(kNeutralNames));

}  // namespace

std::optional<int> NumberWordValue(std::string_view lower) {
  for (size_t i = 0; i < kUnits.size(); ++i) {
    if (kUnits[i] == lower) return static_cast<int>(i);
  }
  for (size_t i = 0; i < kTens.size(); ++i) {
    if (kTens[i] == lower) return static_cast<int>(30 + 10 * i);
  }
  return std::nullopt;
}

bool IsFunctionWord(std::string_view lower) {
  return Contains(kFunctionWords, lower);
}

bool IsModifierWord(std::string_view lower) {
  return Contains(kModifiers, lower);
}

bool IsCommonVerb(std::string_view lower) { return Contains(kVerbs, lower); }

std::optional<Gender> LookupName(std::string_view word) {
  if (word.empty()) return std::nullopt;
  std::string lower(word);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  // Names that are also common words must be capitalized to count.
  if ((lower == "will" || lower == "rose" || lower == "mark" ||
       lower == "max" || lower == "grace" || lower == "pat") &&
      !std::isupper(static_cast<unsigned char>(word.front()))) {
    return std::nullopt;
  }
  if (Contains(kNeutralNames, lower)) return Gender::kUnknown;
  if (Contains(kMaleNames, lower)) return Gender::kMale;
  if (Contains(kFemaleNames, lower)) return Gender::kFemale;
  return std::nullopt;
}

PronounInfo ClassifyPronoun(std::string_view lower) {
  if (lower == "he") return {PronounKind::kSubject, Gender::kMale, false};
  if (lower == "him") return {PronounKind::kObject, Gender::kMale, false};
  if (lower == "his") return {PronounKind::kPossessive, Gender::kMale, false};
  if (lower == "she") return {PronounKind::kSubject, Gender::kFemale, false};
  if (lower == "her") {
    return {PronounKind::kAmbiguousHer, Gender::kFemale, false};
  }
  if (lower == "they") return {PronounKind::kSubject, Gender::kUnknown, true};
  if (lower == "them") return {PronounKind::kObject, Gender::kUnknown, true};
  if (lower == "their") {
    return {PronounKind::kPossessive, Gender::kUnknown, true};
  }
  return {};
}

}  // namespace mwp
