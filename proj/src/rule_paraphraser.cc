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

#include "mwp/rule_paraphraser.h"

#include <algorithm>
#include <cctype>
#include <regex>
#include <stdexcept>

#include "mwp/lexicon.h"
#include "mwp/text.h"

namespace mwp {
namespace {

// Building blocks shared by the patterns below.
#define NAME "([A-Z][a-z]+)"
#define NP "([A-Z][a-z]+|(?:A|An|The) [a-z]+)"
#define PRON "(he|she|they|we|you|I|[A-Z][a-z]+)"
#define NUM "(\\d+(?:\\.\\d+)?)"
#define REST "([a-z][^.?!]*?)"

std::vector<RewriteRule> BuildRules() {
  return {
      {"stored-in", "^" NP " has " NUM " ([a-z]+) stored in " REST "\\.$",
       {"$1 has $2 $3 in $4."}},
      {"has-two-kinds", "^" NP " has " NUM " ([a-z]+) and " NUM " ([a-z]+)\\.$",
       {"$1 has $4 $5 and $2 $3."}},
      {"has-got", "^" NP " has " NUM " " REST "\\.$", {"$1 has got $2 $3."}},
      {"has-possession", "^" NAME " has " NUM " " REST "\\.$",
       {"There are $2 $3 in $1's possession."}, true},
      {"had-total", "^" NP " had " NUM " " REST "\\.$",
       {"$1 had a total of $2 $3."}},
      {"had-possession", "^" NAME " had " NUM " " REST "\\.$",
       {"There were $2 $3 in $1's possession."}, true},
      {"bought", "^" NP " bought " NUM " " REST "\\.$",
       {"$1 purchased $2 $3."}},
      {"earned", "^" NP " earned " NUM " " REST "\\.$", {"$1 got $2 $3."}},
      {"time-fronting", "^" NAME " made " NUM " " REST " over the ([a-z]+)\\.$",
       {"Over the $4, $1 made $2 $3."}, true},
      {"spent-buying", "^(?:If )?" PRON " spent " NUM " dollars buying " REST "\\.$",
       {"$1 spent $2 dollars on $3."}},
      {"drop-if", "^If " PRON " ([a-z][^?!]*?)\\.$", {"$1 $2."}},
      {"gave-to", "^" NAME " gave " NUM " ([a-z]+) to " NAME "\\.$",
       {"$1 gave $4 $2 $3."}, true},
      {"past-total",
       "^" NP " (ate|sold|lost|found|picked|baked|caught|collected|used|won|read) "
       NUM " " REST "\\.$",
       {"$1 $2 a total of $3 $4."}},
      {"there-are", "^There (are|were) " NUM " " REST "\\.$", {"$2 $3 $1 there."}},
      {"if-there-question",
       "^If there (are|is|were|was) " NUM " ([a-z]+), how many (.+)\\?$",
       {"There $1 $2 $3. How many $4?"}},
      {"question-tail",
       "^How many ([a-z]+) (do|does|did) (.+?) (together|in all|altogether|in total)\\?$",
       {"How many $1 $2 $3?"}},
  };
}

#undef NAME
#undef NP
#undef PRON
#undef NUM
#undef REST

struct CompiledRule {
  const RewriteRule* rule;
  std::regex regex;
};

const std::vector<CompiledRule>& CompiledRules() {
  static const std::vector<CompiledRule> compiled = [] {
    std::vector<CompiledRule> out;
    for (const RewriteRule& rule : RewriteRules()) {
      out.push_back({&rule, std::regex(rule.pattern, std::regex::ECMAScript)});
    }
    return out;
  }();
  return compiled;
}

// "grade ." -> "grade.", "3 , but" -> "3, but".
std::string Tidy(std::string_view sentence) {
  std::string text = NormalizeWhitespace(sentence);
  std::string out;
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] == ' ' && i + 1 < text.size() &&
        (text[i + 1] == '.' || text[i + 1] == ',' || text[i + 1] == '?' ||
         text[i + 1] == '!')) {
      continue;
    }
    out.push_back(text[i]);
  }
  return out;
}

}  // namespace

const std::vector<RewriteRule>& RewriteRules() {
  static const std::vector<RewriteRule> rules = BuildRules();
  return rules;
}

std::vector<std::string> RuleParaphrase(std::string_view sentence, int m) {
  if (m < 1) throw std::invalid_argument("RuleParaphrase: m must be >= 1");
  const std::string text = Tidy(sentence);
  std::vector<std::string> out;
  for (const CompiledRule& compiled : CompiledRules()) {
    std::smatch match;
    if (!std::regex_match(text, match, compiled.regex)) continue;
    if (compiled.rule->named_subject && !LookupName(match[1].str())) continue;
    for (const std::string& tmpl : compiled.rule->templates) {
      std::string candidate = match.format(tmpl);
      if (!candidate.empty()) {
        candidate[0] = static_cast<char>(
            std::toupper(static_cast<unsigned char>(candidate[0])));
      }
      if (candidate == text) continue;
      if (std::find(out.begin(), out.end(), candidate) != out.end()) continue;
      out.push_back(std::move(candidate));
      if (out.size() == static_cast<size_t>(m)) return out;
    }
  }
  return out;
}

}  // namespace mwp
