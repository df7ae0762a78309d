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

#include "mwp/http_oracle.h"

#include <stdexcept>

#include "httplib.h"
#include "json.hpp"
#include "mwp/error.h"
#include "mwp/rule_paraphraser.h"

namespace mwp {
namespace {

using nlohmann::json;

struct Call {
  std::string base_url;
  std::string path;
  std::chrono::milliseconds timeout;
  int retries;
  std::string bearer_token;
  std::string oracle;
};

void ConfigureClient(httplib::Client& client, const Call& call) {
  const auto secs = std::chrono::duration_cast<std::chrono::seconds>(call.timeout);
  const auto usecs =
      std::chrono::duration_cast<std::chrono::microseconds>(call.timeout - secs);
  client.set_connection_timeout(secs.count(), usecs.count());
  client.set_read_timeout(secs.count(), usecs.count());
  client.set_write_timeout(secs.count(), usecs.count());
  if (!call.bearer_token.empty()) {
    client.set_bearer_token_auth(call.bearer_token);
  }
}

// One logical request: at most retries + 1 attempts.
json PostJson(const Call& call, const json& body, std::atomic<size_t>& calls) {
  httplib::Client client(call.base_url);
  ConfigureClient(client, call);
  const std::string payload = body.dump();
  std::string last_error;
  for (int attempt = 0; attempt <= call.retries; ++attempt) {
    ++calls;
    auto response = client.Post(call.path, payload, "application/json");
    if (!response) {
      last_error = httplib::to_string(response.error());
      continue;
    }
    if (response->status == 503) {
      last_error = "HTTP 503";
      continue;
    }
    if (response->status != 200) {
      throw Error(ErrorCode::kMalformedResponse,
                  call.oracle + ": HTTP " + std::to_string(response->status) +
                      " from " + call.path);
    }
    json parsed = json::parse(response->body, nullptr, false);
    if (parsed.is_discarded() || !parsed.is_object()) {
      throw Error(ErrorCode::kMalformedResponse,
                  call.oracle + ": response body is not a JSON object");
    }
    return parsed;
  }
  throw Error(ErrorCode::kOracleUnavailable,
              call.oracle + " at " + call.base_url + " unreachable after " +
                  std::to_string(call.retries + 1) + " attempt(s): " +
                  last_error);
}

void CheckId(const json& response, const std::string& id,
             const std::string& oracle) {
  if (response.contains("id") &&
      (!response["id"].is_string() || response["id"].get<std::string>() != id)) {
    throw Error(ErrorCode::kMalformedResponse,
                oracle + ": response id does not echo request id '" + id + "'");
  }
}

bool IsHttpUrl(const std::string& url) {
  return url.rfind("http://", 0) == 0 || url.rfind("https://", 0) == 0;
}

}  // namespace

void Validate(const SolverEndpoint& endpoint) {
  if (!IsHttpUrl(endpoint.base_url)) {
    throw Error(ErrorCode::kInvalidConfig,
                "solver base_url must start with http:// or https://: '" +
                    endpoint.base_url + "'");
  }
  if (endpoint.timeout.count() <= 0) {
    throw Error(ErrorCode::kInvalidConfig, "solver timeout must be > 0");
  }
  if (endpoint.retries < 0) {
    throw Error(ErrorCode::kInvalidConfig, "solver retries must be >= 0");
  }
  if (endpoint.name.empty()) {
    throw Error(ErrorCode::kInvalidConfig, "solver name must be non-empty");
  }
}

void Validate(const ParaphraseProviderConfig& config) {
  if (config.kind == ProviderKind::kRemote &&
      (!config.base_url || !IsHttpUrl(*config.base_url))) {
    throw Error(ErrorCode::kInvalidConfig,
                "remote paraphrase provider needs an http(s) base_url");
  }
  if (config.m_default < 1) {
    throw Error(ErrorCode::kInvalidConfig, "m_default must be >= 1");
  }
  if (config.timeout.count() <= 0 || config.retries < 0) {
    throw Error(ErrorCode::kInvalidConfig,
                "paraphrase timeout must be > 0 and retries >= 0");
  }
}

HttpSolver::HttpSolver(SolverEndpoint endpoint)
    : endpoint_(std::move(endpoint)) {
  Validate(endpoint_);
}

std::string HttpSolver::Solve(const std::string& id, const std::string& text) {
  if (text.empty()) throw std::invalid_argument("Solve: empty problem text");
  const Call call{endpoint_.base_url, "/solve",  endpoint_.timeout,
                  endpoint_.retries,  endpoint_.bearer_token, endpoint_.name};
  const json response = PostJson(call, {{"id", id}, {"text", text}}, calls_);
  CheckId(response, id, endpoint_.name);
  if (!response.contains("equation") || !response["equation"].is_string()) {
    throw Error(ErrorCode::kMalformedResponse,
                endpoint_.name + ": response lacks string field 'equation'");
  }
  return response["equation"].get<std::string>();
}

HttpParaphraser::HttpParaphraser(ParaphraseProviderConfig config)
    : config_(std::move(config)) {
  config_.kind = ProviderKind::kRemote;
  Validate(config_);
}

std::string HttpParaphraser::name() const { return "remote:" + *config_.base_url; }

std::vector<std::string> HttpParaphraser::Paraphrase(const std::string& sentence,
                                                     int m) {
  if (m < 1) throw std::invalid_argument("Paraphrase: m must be >= 1");
  const std::string id = "p" + std::to_string(next_id_++);
  const Call call{*config_.base_url, "/paraphrase", config_.timeout,
                  config_.retries, config_.bearer_token, name()};
  const json response = PostJson(
      call, {{"id", id}, {"sentence", sentence}, {"num_return", m}}, calls_);
  CheckId(response, id, name());
  if (!response.contains("candidates") || !response["candidates"].is_array()) {
    throw Error(ErrorCode::kMalformedResponse,
                name() + ": response lacks array field 'candidates'");
  }
  std::vector<std::string> out;
  for (const auto& candidate : response["candidates"]) {
    if (!candidate.is_string()) {
      throw Error(ErrorCode::kMalformedResponse,
                  name() + ": non-string paraphrase candidate");
    }
    out.push_back(candidate.get<std::string>());
  }
  return out;
}

bool HttpParaphraser::Healthy() {
  httplib::Client client(*config_.base_url);
  ConfigureClient(client, {*config_.base_url, "/health", config_.timeout, 0,
                           config_.bearer_token, name()});
  auto response = client.Get("/health");
  if (!response || response->status != 200) return false;
  const json body = json::parse(response->body, nullptr, false);
  return body.is_object() && body.value("status", "") == "ok";
}

std::unique_ptr<ParaphraseOracle> MakeParaphraser(
    const ParaphraseProviderConfig& config) {
  Validate(config);
  if (config.kind == ProviderKind::kRuleBased) {
    return std::make_unique<RuleParaphraser>();
  }
  return std::make_unique<HttpParaphraser>(config);
}

}  // namespace mwp
