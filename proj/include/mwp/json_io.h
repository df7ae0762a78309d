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

#ifndef MWP_JSON_IO_H_
#define MWP_JSON_IO_H_

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"
#include "mwp/attack.h"
#include "mwp/campaign.h"
#include "mwp/dataset.h"
#include "mwp/oracle.h"

namespace mwp {

// Whole numbers and short terminating decimals become JSON numbers; other
// values are written as exact strings such as "1/3".
nlohmann::json RationalToJson(const Rational& value);
// Accepts JSON numbers and numeric strings. Throws FormatError otherwise.
Rational RationalFromJson(const nlohmann::json& value);

// {id, text, equation, answer, source}. The same shape load_dataset reads in
// generic-jsonl format.
nlohmann::json ToJson(const DatasetRecord& record);

nlohmann::json ToJson(const AttackResult& result);
AttackResult AttackResultFromJson(const nlohmann::json& value);

// Results files hold one line per (solver, record, method), and a single
// line marked "errored" for records an oracle failed on.
void WriteResults(const std::filesystem::path& path,
                  const std::vector<CampaignReport>& reports);
// Rebuilds one report per solver, in order of first appearance, with all
// summary figures recomputed from the lines. Throws FormatError with the
// offending line number.
std::vector<CampaignReport> ReadResults(const std::filesystem::path& path);

nlohmann::json ToJson(const CampaignConfig& config);
// Keys mirror CampaignConfig: methods, m, budget, tol, seed, parallelism,
// success_rule, connective, clause_joiner, resolve_pronouns. Absent keys keep
// the defaults. Unknown keys or ill-typed values raise InvalidConfig.
CampaignConfig ConfigFromJson(const nlohmann::json& value,
                              CampaignConfig base = {});

// {"name": ..., "fallback": ..., "script": {text: equation, ...}}. A
// non-empty `name` overrides the name in the file.
std::unique_ptr<ScriptedSolver> LoadScriptedSolver(
    const std::filesystem::path& path, const std::string& name = "");

}  // namespace mwp

#endif  // MWP_JSON_IO_H_
