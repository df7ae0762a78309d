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

#include "mwp/paraphrase_attack.h"

#include "mwp/error.h"

namespace mwp {

std::vector<CandidateSet> BuildCandidateSets(const MathWordProblem& problem,
                                             ParaphraseOracle& provider,
                                             int m) {
  std::vector<CandidateSet> sets;
  const auto sentences = problem.sentences();
  for (size_t i = 0; i < sentences.size(); ++i) {
    const Sentence& sentence = *sentences[i];
    sets.push_back(FilterCandidates(
        sentence, GetParaphrases(provider, sentence.text, m), i));
  }
  return sets;
}

AttackResult SpAttack(const MathWordProblem& problem, SolverOracle& solver,
                      ParaphraseOracle& provider, const SpOptions& options,
                      const std::optional<OriginalQuery>& original) {
  if (options.m < 1 || options.budget < 1) {
    throw Error(ErrorCode::kInvalidConfig, "m and budget must be >= 1");
  }
  const OriginalQuery first =
      original ? *original : QueryOriginal(problem, solver, options.tolerance);

  AttackResult result;
  result.method = AttackMethod::kSentenceParaphrasing;
  result.problem_id = problem.id;
  result.original_text = problem.raw_text;
  result.adversarial_text = problem.raw_text;
  result.original_prediction = first.prediction;
  result.adversarial_prediction = first.prediction;
  result.originally_correct = first.verdict.correct;
  result.adversarial_correct = first.verdict.correct;
  result.queries_used = 1;
  result.budget = options.budget;
  if (options.success_rule == SuccessRule::kVerdict && !first.verdict.correct) {
    return result;
  }

  const std::vector<CandidateSet> sets =
      BuildCandidateSets(problem, provider, options.m);
  std::vector<size_t> sizes;
  for (const CandidateSet& set : sets) sizes.push_back(set.candidates.size());
  CombinationStream stream(std::move(sizes));
  result.search_space = stream.product_size();

  const GoldLabel gold = GoldOf(problem);
  for (uint64_t tried = 0; tried < options.budget; ++tried) {
    const auto selection = stream.Next();
    if (!selection) break;
    std::string text = JoinSelection(sets, *selection);
    std::string prediction = Solve(solver, problem.id, text);
    ++result.queries_used;
    const SolverVerdict verdict = Judge(prediction, gold, options.tolerance);
    result.attempted_text = text;
    if (IsDeceiving(options.success_rule, first, prediction, verdict)) {
      result.success = true;
      result.adversarial_text = std::move(text);
      result.adversarial_prediction = std::move(prediction);
      result.adversarial_correct = verdict.correct;
      break;
    }
  }
  return result;
}

}  // namespace mwp
