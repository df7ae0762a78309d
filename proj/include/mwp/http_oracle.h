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

#ifndef MWP_HTTP_ORACLE_H_
#define MWP_HTTP_ORACLE_H_

#include <chrono>
#include <memory>
#include <optional>
#include <string>

#include "mwp/oracle.h"

namespace mwp {

struct SolverEndpoint {
  std::string base_url;
  std::chrono::milliseconds timeout{10000};
  int retries = 2;
  std::string name = "solver";
  // Sent as "Authorization: Bearer <token>" when non-empty.
  std::string bearer_token;
};

enum class ProviderKind { kRemote, kRuleBased };

struct ParaphraseProviderConfig {
  ProviderKind kind = ProviderKind::kRuleBased;
  std::optional<std::string> base_url;
  int m_default = 7;
  std::chrono::milliseconds timeout{30000};
  int retries = 2;
  std::string bearer_token;
};

// Throws InvalidConfig when the invariants on either type are violated.
void Validate(const SolverEndpoint& endpoint);
void Validate(const ParaphraseProviderConfig& config);

// POST {base_url}/solve. Transport failures, timeouts and 503 responses are
// retried; once the retries are spent the call raises OracleUnavailable.
// Any other non-200 status, a missing field or an id mismatch raises
// MalformedResponse without retrying.
class HttpSolver : public SolverOracle {
 public:
  explicit HttpSolver(SolverEndpoint endpoint);

  std::string Solve(const std::string& id, const std::string& text) override;
  std::string name() const override { return endpoint_.name; }

  // Remote calls made so far, retries included.
  size_t calls() const { return calls_.load(); }

 private:
  SolverEndpoint endpoint_;
  std::atomic<size_t> calls_{0};
};

// POST {base_url}/paraphrase with the same failure policy as HttpSolver.
class HttpParaphraser : public ParaphraseOracle {
 public:
  explicit HttpParaphraser(ParaphraseProviderConfig config);

  std::vector<std::string> Paraphrase(const std::string& sentence,
                                      int m) override;
  std::string name() const override;

  // GET {base_url}/health; true iff 200 {"status":"ok"}.
  bool Healthy();
  size_t calls() const { return calls_.load(); }

 private:
  ParaphraseProviderConfig config_;
  std::atomic<size_t> calls_{0};
  std::atomic<uint64_t> next_id_{0};
};

// The rule-based provider or an HttpParaphraser, per config.kind.
std::unique_ptr<ParaphraseOracle> MakeParaphraser(
    const ParaphraseProviderConfig& config);

}  // namespace mwp

#endif  // MWP_HTTP_ORACLE_H_
