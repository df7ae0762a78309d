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

#ifndef MWP_ORACLE_CACHE_H_
#define MWP_ORACLE_CACHE_H_

#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "mwp/oracle.h"

namespace mwp {

// Stable 16-hex-digit key over (oracle name, whitespace-normalized text, m).
std::string CacheKey(std::string_view oracle_name, std::string_view text,
                     std::optional<int> m = std::nullopt);

// Response cache shared by the caching oracle wrappers. With a file it is
// persisted as line-delimited JSON records {key, kind, request, response, ts}
// and reloaded on construction, so interrupted campaigns resume where they
// stopped. Concurrent Store() calls on one key are last-writer-wins.
class OracleCache {
 public:
  OracleCache() = default;
  explicit OracleCache(std::filesystem::path file);

  OracleCache(const OracleCache&) = delete;
  OracleCache& operator=(const OracleCache&) = delete;

  std::optional<nlohmann::json> Lookup(const std::string& key,
                                       const nlohmann::json& request) const;
  void Store(const std::string& key, std::string_view kind,
             const nlohmann::json& request, const nlohmann::json& response);

  size_t size() const;
  // Unparseable lines skipped while loading (e.g. a torn final write).
  size_t skipped_lines() const { return skipped_lines_; }

 private:
  struct Entry {
    nlohmann::json request;
    nlohmann::json response;
  };

  mutable std::mutex mu_;
  std::map<std::string, Entry> entries_;
  std::optional<std::ofstream> out_;
  size_t skipped_lines_ = 0;
};

class CachingSolver : public SolverOracle {
 public:
  CachingSolver(SolverOracle& inner, OracleCache& cache)
      : inner_(inner), cache_(cache) {}

  std::string Solve(const std::string& id, const std::string& text) override;
  std::string name() const override { return inner_.name(); }

 private:
  SolverOracle& inner_;
  OracleCache& cache_;
};

class CachingParaphraser : public ParaphraseOracle {
 public:
  CachingParaphraser(ParaphraseOracle& inner, OracleCache& cache)
      : inner_(inner), cache_(cache) {}

  std::vector<std::string> Paraphrase(const std::string& sentence,
                                      int m) override;
  std::string name() const override { return inner_.name(); }

 private:
  ParaphraseOracle& inner_;
  OracleCache& cache_;
};

}  // namespace mwp

#endif  // MWP_ORACLE_CACHE_H_
