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

#ifndef MWP_RULE_PARAPHRASER_H_
#define MWP_RULE_PARAPHRASER_H_

#include <string>
#include <string_view>
#include <vector>

#include "mwp/oracle.h"

namespace mwp {

// One row of the rewrite table. `pattern` is an ECMAScript regex matched
// against the whole sentence after whitespace cleanup; each template is
// expanded with $1..$n. When `named_subject` is set, capture group 1 must be
// a first name from the lexicon.
struct RewriteRule {
  std::string name;
  std::string pattern;
  std::vector<std::string> templates;
  bool named_subject = false;
};

const std::vector<RewriteRule>& RewriteRules();

// Deterministic offline paraphraser. Outputs keep every number and its
// head entity; unmatched sentences give an empty list.
std::vector<std::string> RuleParaphrase(std::string_view sentence, int m);

class RuleParaphraser : public ParaphraseOracle {
 public:
  std::vector<std::string> Paraphrase(const std::string& sentence,
                                      int m) override {
    return RuleParaphrase(sentence, m);
  }
  std::string name() const override { return "rule-based"; }
};

}  // namespace mwp

#endif  // MWP_RULE_PARAPHRASER_H_
