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

#ifndef MWP_REORDER_ATTACK_H_
#define MWP_REORDER_ATTACK_H_

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mwp/attack.h"
#include "mwp/oracle.h"
#include "mwp/problem.h"

namespace mwp {

// Decides whether a capitalized word is a name, using the whole problem as
// context: a word counts when it is in the first-name lexicon or when it also
// appears capitalized somewhere other than the start of a sentence.
class NameIndex {
 public:
  explicit NameIndex(const MathWordProblem& problem);

  bool IsProperNoun(const Sentence& sentence, size_t token_index) const;

 private:
  std::set<std::string> mid_sentence_names_;
};

// "If she had 10 bags, but didn't recycle 3 of them, how many ...?" carries a
// conditional clause in front of the interrogative. Token indices refer to the
// question sentence.
struct LeadingConditional {
  size_t comma_token = 0;
  size_t main_begin_token = 0;
  // "If there are 3 boxes, ..." sets up the question rather than narrating an
  // event, so it stays attached to the question.
  bool existential = false;
};

std::optional<LeadingConditional> FindLeadingConditional(const Sentence& question);

struct CorefOptions {
  // Replace every pronoun bound to a name, not only the first one.
  bool all_mentions = false;
};

struct CorefResult {
  MathWordProblem problem;
  // Singular pronouns in the question left in place for lack of a
  // gender-compatible named antecedent.
  std::vector<std::string> unresolved;
};

// Rewrites third-person singular pronouns in the question with the nearest
// preceding named antecedent from the body ("his" -> "Oliver's"). Plural
// pronouns, body sentences and numbers are never touched. Questions that open
// with a conditional clause are left as they are.
CorefResult ResolveCoreferences(const MathWordProblem& problem,
                                const CorefOptions& options = {});

struct ReorderConfig {
  std::string connective = "given that";
  std::string clause_joiner = "and";
  bool resolve_pronouns = true;
};

// Question first, then the body in original order:
//   "<question> given that <S1> and <S2>?"
// Throws Error(kNoBodySentences) and Error(kInvalidConfig).
std::string ReorderQuestion(const MathWordProblem& problem,
                            const ReorderConfig& config = {});

struct QrOptions {
  ReorderConfig reorder;
  SuccessRule success_rule = SuccessRule::kVerdict;
  double tolerance = kDefaultAnswerTolerance;
};

// Queries the solver on the original and the reordered text (two queries;
// `original` may carry a precomputed first answer). Transport failures
// surface as Error(kOracleUnavailable).
AttackResult QrAttack(const MathWordProblem& problem, SolverOracle& solver,
                      const QrOptions& options = {},
                      const std::optional<OriginalQuery>& original = {});

}  // namespace mwp

#endif  // MWP_REORDER_ATTACK_H_
