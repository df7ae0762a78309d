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

#include "mwp/campaign.h"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <mutex>
#include <thread>

#include "json.hpp"
#include "mwp/error.h"
#include "mwp/json_io.h"
#include "mwp/paraphrase_attack.h"

namespace mwp {
namespace {

bool IsOracleFailure(const Error& e) {
  return e.code() == ErrorCode::kOracleUnavailable ||
         e.code() == ErrorCode::kMalformedResponse;
}

// Result for a problem the method cannot perturb (e.g. QR without body
// sentences): P* stays the original and only the original query counts.
AttackResult Unattacked(const MathWordProblem& problem, AttackMethod method,
                        const OriginalQuery& first, uint64_t budget) {
  AttackResult result;
  result.method = method;
  result.problem_id = problem.id;
  result.original_text = problem.raw_text;
  result.adversarial_text = problem.raw_text;
  result.original_prediction = first.prediction;
  result.adversarial_prediction = first.prediction;
  result.originally_correct = first.verdict.correct;
  result.adversarial_correct = first.verdict.correct;
  result.queries_used = 1;
  result.search_space = 1;
  result.budget = budget;
  return result;
}

RecordOutcome AttackRecord(const DatasetRecord& record, SolverOracle& solver,
                           ParaphraseOracle& provider,
                           const CampaignConfig& config) {
  RecordOutcome outcome;
  outcome.record = record;
  try {
    const MathWordProblem problem = ToProblem(record);
    const OriginalQuery first =
        QueryOriginal(problem, solver, config.tolerance);
    for (AttackMethod method : config.methods) {
      try {
        if (method == AttackMethod::kQuestionReordering) {
          QrOptions options;
          options.reorder = config.reorder;
          options.success_rule = config.success_rule;
          options.tolerance = config.tolerance;
          outcome.attacks.push_back(QrAttack(problem, solver, options, first));
        } else {
          SpOptions options;
          options.m = config.m;
          options.budget = config.budget;
          options.success_rule = config.success_rule;
          options.tolerance = config.tolerance;
          outcome.attacks.push_back(
              SpAttack(problem, solver, provider, options, first));
        }
      } catch (const Error& e) {
        if (IsOracleFailure(e)) throw;
        outcome.attacks.push_back(
            Unattacked(problem, method, first,
                       method == AttackMethod::kQuestionReordering
                           ? 1
                           : config.budget));
      }
    }
  } catch (const Error& e) {
    if (!IsOracleFailure(e)) throw;
    outcome.errored = true;
    outcome.error = e.what();
    outcome.attacks.clear();
  }
  return outcome;
}

double Percent(size_t part, size_t whole) {
  return whole == 0 ? 0.0 : 100.0 * static_cast<double>(part) /
                                static_cast<double>(whole);
}

}  // namespace

void Validate(const CampaignConfig& config) {
  if (config.methods.empty()) {
    throw Error(ErrorCode::kInvalidConfig, "methods must be non-empty");
  }
  for (size_t i = 0; i < config.methods.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      if (config.methods[i] == config.methods[j]) {
        throw Error(ErrorCode::kInvalidConfig,
                    "method " + std::string(AttackMethodName(config.methods[i])) +
                        " listed twice");
      }
    }
  }
  if (config.m < 1) throw Error(ErrorCode::kInvalidConfig, "m must be >= 1");
  if (config.budget < 1) {
    throw Error(ErrorCode::kInvalidConfig, "budget must be >= 1");
  }
  if (!(config.tolerance >= 0)) {
    throw Error(ErrorCode::kInvalidConfig, "tolerance must be >= 0");
  }
  if (config.parallelism < 1) {
    throw Error(ErrorCode::kInvalidConfig, "parallelism must be >= 1");
  }
  if (config.reorder.connective.empty() || config.reorder.clause_joiner.empty()) {
    throw Error(ErrorCode::kInvalidConfig,
                "connective and clause joiner must be non-empty");
  }
}

CampaignReport Summarize(std::string solver, std::vector<RecordOutcome> outcomes,
                         const std::vector<AttackMethod>& methods) {
  CampaignReport report;
  report.solver = std::move(solver);
  report.outcomes = std::move(outcomes);
  for (AttackMethod method : methods) {
    MethodSummary summary;
    summary.method = method;
    uint64_t queries = 0;
    for (const RecordOutcome& outcome : report.outcomes) {
      if (outcome.errored) continue;
      for (const AttackResult& result : outcome.attacks) {
        if (result.method != method) continue;
        ++summary.evaluated;
        summary.originally_correct += result.originally_correct;
        summary.adversarially_correct += result.adversarial_correct;
        summary.successes += result.success && result.originally_correct;
        queries += result.queries_used;
      }
    }
    summary.original_accuracy =
        Percent(summary.originally_correct, summary.evaluated);
    summary.adversarial_accuracy =
        Percent(summary.adversarially_correct, summary.evaluated);
    summary.success_rate = Percent(summary.successes, summary.originally_correct);
    summary.mean_queries =
        summary.evaluated == 0
            ? 0.0
            : static_cast<double>(queries) / static_cast<double>(summary.evaluated);
    report.methods.push_back(summary);
  }
  size_t correct = 0;
  for (const RecordOutcome& outcome : report.outcomes) {
    if (outcome.errored) {
      ++report.errored;
      continue;
    }
    ++report.evaluated;
    if (!outcome.attacks.empty() && outcome.attacks.front().originally_correct) {
      ++correct;
    }
  }
  report.original_accuracy = Percent(correct, report.evaluated);
  return report;
}

CampaignReport RunCampaign(const std::vector<DatasetRecord>& records,
                           SolverOracle& solver, ParaphraseOracle& provider,
                           const CampaignConfig& config) {
  Validate(config);
  std::vector<RecordOutcome> outcomes(records.size());
  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (size_t i = next++; i < records.size(); i = next++) {
      try {
        outcomes[i] = AttackRecord(records[i], solver, provider, config);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next = records.size();
      }
    }
  };
  const size_t workers = std::min<size_t>(
      static_cast<size_t>(config.parallelism), std::max<size_t>(records.size(), 1));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return Summarize(solver.name(), std::move(outcomes), config.methods);
}

std::string AdversarialId(const std::string& record_id, AttackMethod method,
                          const std::string& solver) {
  std::string id = record_id + "-" + std::string(AttackMethodName(method));
  if (!solver.empty()) id += "-" + solver;
  return id;
}

size_t ExportAdversarialTrainingSet(
    const std::vector<CampaignReport>& reports,
    const std::filesystem::path& out_path,
    const std::function<bool(const std::string&)>& keep) {
  std::ofstream out(out_path, std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + out_path.string());
  size_t written = 0;
  for (const CampaignReport& report : reports) {
    for (const RecordOutcome& outcome : report.outcomes) {
      if (outcome.errored) continue;
      for (const AttackResult& result : outcome.attacks) {
        if (!result.success) continue;
        DatasetRecord exported = outcome.record;
        exported.id = AdversarialId(outcome.record.id, result.method,
                                    reports.size() > 1 ? report.solver : "");
        if (keep && !keep(exported.id)) continue;
        exported.text = result.adversarial_text;
        nlohmann::json line = ToJson(exported);
        line["method"] = AttackMethodName(result.method);
        out << line.dump() << '\n';
        ++written;
      }
    }
  }
  out.flush();
  if (!out) throw Error(ErrorCode::kIoError, "write failed: " + out_path.string());
  return written;
}

}  // namespace mwp
