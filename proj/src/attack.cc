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

#include "mwp/attack.h"

#include "mwp/text.h"

namespace mwp {

std::string_view AttackMethodName(AttackMethod method) {
  return method == AttackMethod::kQuestionReordering ? "QR" : "SP";
}

std::optional<AttackMethod> ParseAttackMethod(std::string_view name) {
  const std::string lower = ToLower(name);
  if (lower == "qr") return AttackMethod::kQuestionReordering;
  if (lower == "sp") return AttackMethod::kSentenceParaphrasing;
  return std::nullopt;
}

std::string_view SuccessRuleName(SuccessRule rule) {
  return rule == SuccessRule::kVerdict ? "verdict" : "prediction-change";
}

std::optional<SuccessRule> ParseSuccessRule(std::string_view name) {
  if (name == "verdict") return SuccessRule::kVerdict;
  if (name == "prediction-change") return SuccessRule::kPredictionChange;
  return std::nullopt;
}

bool IsDeceiving(SuccessRule rule, const OriginalQuery& original,
                 std::string_view adversarial_prediction,
                 const SolverVerdict& adversarial_verdict) {
  if (rule == SuccessRule::kVerdict) {
    return original.verdict.correct && !adversarial_verdict.correct;
  }
  return NormalizeWhitespace(adversarial_prediction) !=
         NormalizeWhitespace(original.prediction);
}

GoldLabel GoldOf(const MathWordProblem& problem) {
  return GoldLabel{problem.gold_equation, problem.gold_answer};
}

OriginalQuery QueryOriginal(const MathWordProblem& problem,
                            SolverOracle& solver, double tolerance) {
  OriginalQuery query;
  query.prediction = Solve(solver, problem.id, problem.raw_text);
  query.verdict = Judge(query.prediction, GoldOf(problem), tolerance);
  return query;
}

}  // namespace mwp
