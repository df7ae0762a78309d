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

#ifndef MWP_CAMPAIGN_H_
#define MWP_CAMPAIGN_H_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "mwp/attack.h"
#include "mwp/dataset.h"
#include "mwp/oracle.h"
#include "mwp/reorder_attack.h"

namespace mwp {

struct CampaignConfig {
  std::vector<AttackMethod> methods = {AttackMethod::kQuestionReordering,
                                       AttackMethod::kSentenceParaphrasing};
  int m = 7;
  uint64_t budget = 512;
  double tolerance = kDefaultAnswerTolerance;
  // Recorded for provenance. Every attack step is deterministic, so nothing
  // consumes it.
  int64_t seed = 0;
  int parallelism = 1;
  SuccessRule success_rule = SuccessRule::kVerdict;
  ReorderConfig reorder;
};

// Throws InvalidConfig on an empty or repeated method list, m < 1,
// budget < 1, negative tolerance or parallelism < 1.
void Validate(const CampaignConfig& config);

struct RecordOutcome {
  DatasetRecord record;
  // Set when an oracle failed for this record. Errored records carry no
  // attack results and are left out of every denominator.
  bool errored = false;
  std::string error;
  // One result per configured method, in config order.
  std::vector<AttackResult> attacks;
};

struct MethodSummary {
  AttackMethod method = AttackMethod::kQuestionReordering;
  size_t evaluated = 0;
  size_t originally_correct = 0;
  size_t adversarially_correct = 0;
  // Successful attacks on originally-correct problems.
  size_t successes = 0;
  double original_accuracy = 0;     // percent
  double adversarial_accuracy = 0;  // percent
  double success_rate = 0;          // percent of originally-correct
  double mean_queries = 0;          // per evaluated problem
};

struct CampaignReport {
  std::string solver;
  std::vector<RecordOutcome> outcomes;
  std::vector<MethodSummary> methods;
  size_t evaluated = 0;
  size_t errored = 0;
  double original_accuracy = 0;  // percent
};

// Recomputes every summary figure from the outcomes. `methods` fixes the
// row order; methods with no results still get an all-zero row.
CampaignReport Summarize(std::string solver, std::vector<RecordOutcome> outcomes,
                         const std::vector<AttackMethod>& methods);

// Attacks every record with every configured method. The original prediction
// is obtained once per record and shared by the methods. Records are spread
// over `parallelism` workers; the outcome order always follows `records`.
CampaignReport RunCampaign(const std::vector<DatasetRecord>& records,
                           SolverOracle& solver, ParaphraseOracle& provider,
                           const CampaignConfig& config);

// Writes one line {id, text, equation, answer, method, source} per
// successful attack, with the gold labels of the source record. The file is
// created even when nothing qualifies. With `keep` set, only examples whose
// AdversarialId passes it are written. Returns the number of lines.
size_t ExportAdversarialTrainingSet(
    const std::vector<CampaignReport>& reports,
    const std::filesystem::path& out_path,
    const std::function<bool(const std::string&)>& keep = nullptr);

// Id of an exported adversarial example, e.g. "t1-QR". Campaigns over several
// solvers pass the solver name, giving "t1-QR-graph2tree".
std::string AdversarialId(const std::string& record_id, AttackMethod method,
                          const std::string& solver = "");

}  // namespace mwp

#endif  // MWP_CAMPAIGN_H_
