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

#include "mwp/oracle.h"

#include <stdexcept>

#include "mwp/text.h"

namespace mwp {

std::string Solve(SolverOracle& solver, const std::string& id,
                  const std::string& text) {
  if (NormalizeWhitespace(text).empty()) {
    throw std::invalid_argument("Solve: problem text is empty");
  }
  return solver.Solve(id, text);
}

std::vector<std::string> GetParaphrases(ParaphraseOracle& provider,
                                        const std::string& sentence, int m) {
  if (m < 1) throw std::invalid_argument("GetParaphrases: m must be >= 1");
  std::vector<std::string> out;
  for (std::string& candidate : provider.Paraphrase(sentence, m)) {
    if (NormalizeWhitespace(candidate).empty()) continue;
    out.push_back(std::move(candidate));
    if (out.size() == static_cast<size_t>(m)) break;
  }
  return out;
}

ScriptedSolver::ScriptedSolver(const std::map<std::string, std::string>& script,
                               std::string fallback, std::string name)
    : fallback_(std::move(fallback)), name_(std::move(name)) {
  for (const auto& [text, equation] : script) {
    script_[NormalizeWhitespace(text)] = equation;
  }
}

std::string ScriptedSolver::Solve(const std::string& /*id*/,
                                  const std::string& text) {
  ++calls_;
  auto it = script_.find(NormalizeWhitespace(text));
  return it == script_.end() ? fallback_ : it->second;
}

}  // namespace mwp
