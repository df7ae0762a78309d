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

#include "mwp/oracle_cache.h"

#include <chrono>
#include <cstdint>
#include <cstdio>

#include "mwp/error.h"
#include "mwp/text.h"

namespace mwp {
namespace {

uint64_t Fnv1a(std::string_view data) {
  uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

nlohmann::json Request(std::string_view oracle, std::string_view text,
                       std::optional<int> m) {
  nlohmann::json request = {{"oracle", oracle},
                            {"text", NormalizeWhitespace(text)}};
  if (m) request["m"] = *m;
  return request;
}

}  // namespace

std::string CacheKey(std::string_view oracle_name, std::string_view text,
                     std::optional<int> m) {
  std::string material(oracle_name);
  material += '\x1f';
  material += NormalizeWhitespace(text);
  material += '\x1f';
  if (m) material += std::to_string(*m);
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(Fnv1a(material)));
  return buf;
}

OracleCache::OracleCache(std::filesystem::path file) {
  if (std::ifstream in(file); in) {
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      auto record = nlohmann::json::parse(line, nullptr, false);
      if (record.is_discarded() || !record.is_object() ||
          !record.contains("key") || !record.contains("request") ||
          !record.contains("response")) {
        ++skipped_lines_;
        continue;
      }
      entries_[record["key"].get<std::string>()] = {record["request"],
                                                   record["response"]};
    }
  }
  out_.emplace(file, std::ios::app);
  if (!*out_) {
    throw Error(ErrorCode::kIoError, "cannot open cache file " + file.string());
  }
}

std::optional<nlohmann::json> OracleCache::Lookup(
    const std::string& key, const nlohmann::json& request) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = entries_.find(key);
  if (it == entries_.end() || it->second.request != request) return std::nullopt;
  return it->second.response;
}

void OracleCache::Store(const std::string& key, std::string_view kind,
                        const nlohmann::json& request,
                        const nlohmann::json& response) {
  std::lock_guard<std::mutex> lock(mu_);
  entries_[key] = {request, response};
  if (out_) {
    const auto ts = std::chrono::duration_cast<std::chrono::seconds>(
                        std::chrono::system_clock::now().time_since_epoch())
                        .count();
    nlohmann::json record = {{"key", key},
                             {"kind", kind},
                             {"request", request},
                             {"response", response},
                             {"ts", ts}};
    *out_ << record.dump() << '\n';
    out_->flush();
  }
}

size_t OracleCache::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return entries_.size();
}

std::string CachingSolver::Solve(const std::string& id,
                                 const std::string& text) {
  const std::string oracle = inner_.name();
  const nlohmann::json request = Request(oracle, text, std::nullopt);
  const std::string key = CacheKey(oracle, text);
  if (auto hit = cache_.Lookup(key, request); hit && hit->is_string()) {
    return hit->get<std::string>();
  }
  std::string equation = inner_.Solve(id, text);
  cache_.Store(key, "solve", request, equation);
  return equation;
}

std::vector<std::string> CachingParaphraser::Paraphrase(
    const std::string& sentence, int m) {
  const std::string oracle = inner_.name();
  const nlohmann::json request = Request(oracle, sentence, m);
  const std::string key = CacheKey(oracle, sentence, m);
  if (auto hit = cache_.Lookup(key, request); hit && hit->is_array()) {
    return hit->get<std::vector<std::string>>();
  }
  std::vector<std::string> candidates = inner_.Paraphrase(sentence, m);
  cache_.Store(key, "paraphrase", request, candidates);
  return candidates;
}

}  // namespace mwp
