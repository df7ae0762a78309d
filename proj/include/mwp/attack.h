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

#ifndef MWP_ATTACK_H_
#define MWP_ATTACK_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "mwp/equation.h"
#include "mwp/oracle.h"
#include "mwp/problem.h"

namespace mwp {

enum class AttackMethod { kQuestionReordering, kSentenceParaphrasing };

std::string_view AttackMethodName(AttackMethod method);  // "QR" / "SP"
std::optional<AttackMethod> ParseAttackMethod(std::string_view name);

// kVerdict: the adversarial text must turn a correct prediction into an
// incorrect or invalid one. kPredictionChange: any change of the predicted
// equation text counts, whatever the original verdict.
enum class SuccessRule { kVerdict, kPredictionChange };

std::string_view SuccessRuleName(SuccessRule rule);
std::optional<SuccessRule> ParseSuccessRule(std::string_view name);

// Solver output on the unmodified problem, judged against gold.
struct OriginalQuery {
  std::string prediction;
  SolverVerdict verdict;
};

struct AttackResult {
  AttackMethod method = AttackMethod::kQuestionReordering;
  std::string problem_id;
  std::string original_text;
  // The final text P*. Equals original_text when no deceiving text was found.
  std::string adversarial_text;
  // Last perturbed text sent to the solver, if any.
  std::string attempted_text;
  std::string original_prediction;
  std::string adversarial_prediction;
  bool success = false;
  bool originally_correct = false;
  // Verdict of adversarial_prediction.
  bool adversarial_correct = false;
  uint64_t queries_used = 0;
  // Number of distinct texts the attack could send, original included.
  uint64_t search_space = 0;
  uint64_t budget = 0;
};

bool IsDeceiving(SuccessRule rule, const OriginalQuery& original,
                 std::string_view adversarial_prediction,
                 const SolverVerdict& adversarial_verdict);

GoldLabel GoldOf(const MathWordProblem& problem);

// Solver call on the unmodified problem text, judged against gold.
OriginalQuery QueryOriginal(const MathWordProblem& problem,
                            SolverOracle& solver, double tolerance);

}  // namespace mwp

#endif  // MWP_ATTACK_H_
