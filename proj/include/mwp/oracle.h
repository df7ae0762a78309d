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

#ifndef MWP_ORACLE_H_
#define MWP_ORACLE_H_

#include <atomic>
#include <map>
#include <string>
#include <vector>

namespace mwp {

// Black-box solver: problem text in, raw equation text out. Implementations
// must tolerate concurrent calls.
class SolverOracle {
 public:
  virtual ~SolverOracle() = default;

  virtual std::string Solve(const std::string& id, const std::string& text) = 0;
  virtual std::string name() const = 0;
};

// Paraphrase provider: top candidates for one sentence, best first.
class ParaphraseOracle {
 public:
  virtual ~ParaphraseOracle() = default;

  virtual std::vector<std::string> Paraphrase(const std::string& sentence,
                                              int m) = 0;
  virtual std::string name() const = 0;
};

// Checks the non-empty-text precondition and forwards to the oracle.
std::string Solve(SolverOracle& solver, const std::string& id,
                  const std::string& text);

// At most m non-empty candidates in provider rank order. m must be >= 1.
std::vector<std::string> GetParaphrases(ParaphraseOracle& provider,
                                        const std::string& sentence, int m);

// Deterministic test double. Lookups use whitespace-normalized text.
class ScriptedSolver : public SolverOracle {
 public:
  ScriptedSolver(const std::map<std::string, std::string>& script,
                 std::string fallback, std::string name = "scripted");

  std::string Solve(const std::string& id, const std::string& text) override;
  std::string name() const override { return name_; }

  size_t calls() const { return calls_.load(); }

 private:
  std::map<std::string, std::string> script_;
  std::string fallback_;
  std::string name_;
  std::atomic<size_t> calls_{0};
};

}  // namespace mwp

#endif  // MWP_ORACLE_H_
