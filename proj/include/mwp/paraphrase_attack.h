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

#ifndef MWP_PARAPHRASE_ATTACK_H_
#define MWP_PARAPHRASE_ATTACK_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mwp/attack.h"
#include "mwp/oracle.h"
#include "mwp/problem.h"

namespace mwp {

// Binds a number to what it counts and who holds it. Lemmas are lowercase
// and plural-normalized; an empty lemma means "not found".
struct HeadEntity {
  Rational value;
  std::string entity_lemma;
  std::string subject_lemma;

  friend bool operator==(const HeadEntity&, const HeadEntity&) = default;
};

// One HeadEntity per quantity, in order.
//   entity:  nearest noun after the number, else nearest noun before it.
//   subject: first name before the number, else the first pronoun or noun
//            before it, else a possessor anywhere ("in Mike's possession"),
//            else the first name after the number.
std::vector<HeadEntity> ExtractHeadEntities(const Sentence& sentence);

struct CandidateSet {
  size_t sentence_index = 0;
  // Provider rank order, surviving candidates only; the original sentence is
  // always the last element.
  std::vector<std::string> candidates;

  size_t original_index() const { return candidates.size() - 1; }
};

// Keeps a candidate iff its quantity values equal the original's as a
// multiset, every original head entity has an exact match among the
// candidate's, and it has as many '?' as the original. Empty candidates and
// whitespace-normalized duplicates (including copies of the original) drop.
CandidateSet FilterCandidates(const Sentence& original,
                              const std::vector<std::string>& raw_candidates,
                              size_t sentence_index = 0);

// Walks the Cartesian product of candidate indices (one per set, index
// size-1 meaning "keep the original") ordered by the number of replaced
// sentences, then lexicographically. The all-original selection is skipped.
class CombinationStream {
 public:
  explicit CombinationStream(std::vector<size_t> set_sizes);

  std::optional<std::vector<size_t>> Next();

  // Full product size, saturating at UINT64_MAX.
  uint64_t product_size() const { return product_size_; }

 private:
  void Fill(size_t from, size_t needed);
  bool Advance();

  std::vector<size_t> sizes_;
  // perturbable_from_[i]: positions >= i that have a non-original candidate.
  std::vector<size_t> perturbable_from_;
  std::vector<size_t> current_;
  size_t level_ = 0;
  bool started_ = false;
  bool done_ = false;
  uint64_t product_size_ = 1;
};

std::string JoinSelection(const std::vector<CandidateSet>& sets,
                          const std::vector<size_t>& selection);

// The first min(budget, product - 1) texts of the stream.
std::vector<std::string> EnumerateCombinations(
    const std::vector<CandidateSet>& sets, uint64_t budget);

struct SpOptions {
  int m = 7;
  uint64_t budget = 512;
  SuccessRule success_rule = SuccessRule::kVerdict;
  double tolerance = kDefaultAnswerTolerance;
};

// Paraphrase candidates for every body sentence and the question, filtered.
std::vector<CandidateSet> BuildCandidateSets(const MathWordProblem& problem,
                                             ParaphraseOracle& provider, int m);

// Sentence Paraphrasing: query the combinations in stream order and stop at
// the first deceiving one. Under the verdict rule an originally wrong
// problem is not searched. queries_used = 1 + combinations tried.
AttackResult SpAttack(const MathWordProblem& problem, SolverOracle& solver,
                      ParaphraseOracle& provider, const SpOptions& options = {},
                      const std::optional<OriginalQuery>& original = {});

}  // namespace mwp

#endif  // MWP_PARAPHRASE_ATTACK_H_
