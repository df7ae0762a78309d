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

#include <gtest/gtest.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <thread>

#include "fixtures.h"
#include "httplib.h"
#include "json.hpp"
#include "mwp/error.h"
#include "mwp/http_oracle.h"
#include "mwp/json_io.h"
#include "mwp/oracle_cache.h"
#include "mwp/paraphrase_attack.h"
#include "mwp/rule_paraphraser.h"

namespace mwp {
namespace {

using nlohmann::json;

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no mwp::Error thrown";
  return ErrorCode::kIoError;
}

std::filesystem::path TempFile(const std::string& name) {
  const auto path = std::filesystem::temp_directory_path() /
                    ("mwp_oracle_test_" + std::to_string(::getpid()) + "_" + name);
  std::filesystem::remove(path);
  return path;
}

// Minimal solver and paraphrase service; behavior is switched per test.
class FakeService {
 public:
  enum class Mode { kOk, kUnavailable, kServerError, kMissingField, kWrongId,
                    kNotJson, kSlow, kFlakyThenOk };

  FakeService() {
    server_.Post("/solve", [this](const httplib::Request& req,
                                  httplib::Response& res) {
      ++hits_;
      const json body = json::parse(req.body);
      last_auth_ = req.get_header_value("Authorization");
      if (Respond(res)) return;
      json out = {{"id", body["id"]}, {"equation", "X = 5+7"}};
      if (mode_ == Mode::kMissingField) out.erase("equation");
      if (mode_ == Mode::kWrongId) out["id"] = "other";
      res.set_content(out.dump(), "application/json");
    });
    server_.Post("/paraphrase", [this](const httplib::Request& req,
                                       httplib::Response& res) {
      ++hits_;
      const json body = json::parse(req.body);
      if (Respond(res)) return;
      json candidates = json::array();
      const int n = body["num_return"].get<int>();
      for (const std::string& c :
           RuleParaphrase(body["sentence"].get<std::string>(), n)) {
        candidates.push_back(c);
      }
      json out = {{"id", body["id"]}, {"candidates", candidates}};
      if (mode_ == Mode::kMissingField) out.erase("candidates");
      res.set_content(out.dump(), "application/json");
    });
    server_.Get("/health", [](const httplib::Request&, httplib::Response& res) {
      res.set_content(R"({"status":"ok"})", "application/json");
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }

  ~FakeService() {
    server_.stop();
    thread_.join();
  }

  std::string url() const { return "http://127.0.0.1:" + std::to_string(port_); }
  void set_mode(Mode mode) { mode_ = mode; }
  int hits() const { return hits_; }
  std::string last_auth() const { return last_auth_; }

 private:
  // Writes an error response when the mode calls for one.
  bool Respond(httplib::Response& res) {
    switch (mode_.load()) {
      case Mode::kUnavailable:
        res.status = 503;
        return true;
      case Mode::kServerError:
        res.status = 500;
        return true;
      case Mode::kNotJson:
        res.set_content("<html>", "text/html");
        return true;
      case Mode::kSlow:
        std::this_thread::sleep_for(std::chrono::milliseconds(400));
        return false;
      case Mode::kFlakyThenOk:
        if (hits_ < 3) {
          res.status = 503;
          return true;
        }
        return false;
      default:
        return false;
    }
  }

  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
  std::atomic<Mode> mode_{Mode::kOk};
  std::atomic<int> hits_{0};
  std::string last_auth_;
};

SolverEndpoint Endpoint(const std::string& url, int retries = 2) {
  SolverEndpoint e;
  e.base_url = url;
  e.retries = retries;
  e.timeout = std::chrono::milliseconds(2000);
  e.name = "fake";
  return e;
}

TEST(ScriptedSolverTest, MappedFallbackAndEmptyScript) {
  ScriptedSolver solver({{fixtures::kBooks, "X = 5+7"}}, "X = 0");
  EXPECT_EQ(Solve(solver, "t1", fixtures::kBooks), "X = 5+7");
  EXPECT_EQ(Solve(solver, "t1", "  Tim has 5 books.  Mike has 7 books. How many "
                                "books do they have together?"),
            "X = 5+7");
  EXPECT_EQ(Solve(solver, "t1", "Something else?"), "X = 0");
  ScriptedSolver empty({}, "X = 1");
  EXPECT_EQ(Solve(empty, "a", "anything"), "X = 1");
  EXPECT_EQ(empty.name(), "scripted");
}

TEST(ScriptedSolverTest, EmptyTextIsAPreconditionViolation) {
  ScriptedSolver solver({}, "X = 0");
  EXPECT_THROW(Solve(solver, "t1", ""), std::invalid_argument);
}

class FixedParaphraser : public ParaphraseOracle {
 public:
  explicit FixedParaphraser(std::vector<std::string> out) : out_(std::move(out)) {}
  std::vector<std::string> Paraphrase(const std::string&, int) override {
    ++calls;
    return out_;
  }
  std::string name() const override { return "fixed"; }
  int calls = 0;

 private:
  std::vector<std::string> out_;
};

TEST(GetParaphrasesTest, CapsDropsEmptiesAndKeepsOrder) {
  FixedParaphraser p({"b", "", "a", "c"});
  EXPECT_EQ(GetParaphrases(p, "s", 2), (std::vector<std::string>{"b", "a"}));
  EXPECT_EQ(GetParaphrases(p, "s", 7), (std::vector<std::string>{"b", "a", "c"}));
  FixedParaphraser none({});
  EXPECT_TRUE(GetParaphrases(none, "s", 3).empty());
  EXPECT_THROW(GetParaphrases(p, "s", 0), std::invalid_argument);
}

TEST(CacheKeyTest, NormalizesWhitespaceAndSeparatesFields) {
  EXPECT_EQ(CacheKey("a", "x  y"), CacheKey("a", " x y "));
  EXPECT_NE(CacheKey("a", "x y"), CacheKey("b", "x y"));
  EXPECT_NE(CacheKey("a", "x y", 3), CacheKey("a", "x y", 4));
  EXPECT_NE(CacheKey("a", "x y", 3), CacheKey("a", "x y"));
  EXPECT_EQ(CacheKey("a", "x").size(), 16u);
}

TEST(OracleCacheTest, RepeatedCallHitsOnce) {
  OracleCache cache;
  ScriptedSolver inner({{fixtures::kBooks, "X = 5+7"}}, "X = 0");
  CachingSolver solver(inner, cache);
  const std::string first = solver.Solve("t1", fixtures::kBooks);
  const std::string second = solver.Solve("t1", fixtures::kBooks);
  EXPECT_EQ(first, second);
  EXPECT_EQ(inner.calls(), 1u);
  EXPECT_EQ(solver.name(), "scripted");
}

TEST(OracleCacheTest, PersistsAcrossInstances) {
  const auto path = TempFile("persist.jsonl");
  ScriptedSolver inner({}, "X = 1+1");
  {
    OracleCache cache(path);
    CachingSolver solver(inner, cache);
    solver.Solve("a", "How many?");
    RuleParaphraser rules;
    CachingParaphraser paraphraser(rules, cache);
    paraphraser.Paraphrase("Tim has 5 books.", 2);
  }
  std::ofstream(path, std::ios::app) << "{\"key\": \"torn";
  OracleCache reloaded(path);
  EXPECT_EQ(reloaded.size(), 2u);
  EXPECT_EQ(reloaded.skipped_lines(), 1u);
  CachingSolver solver(inner, reloaded);
  EXPECT_EQ(solver.Solve("a", "How  many?"), "X = 1+1");
  EXPECT_EQ(inner.calls(), 1u);

  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  const json record = json::parse(line);
  for (const char* key : {"key", "kind", "request", "response", "ts"}) {
    EXPECT_TRUE(record.contains(key)) << key;
  }
  EXPECT_EQ(record["kind"], "solve");
  std::filesystem::remove(path);
}

TEST(OracleCacheTest, AttackResultsAreTheSameWithAndWithoutCache) {
  const MathWordProblem p =
      ParseProblem("t1", fixtures::kBooks, "X = 5+7", Rational(12));
  ScriptedSolver plain({{fixtures::kBooksParaphrased, "X = 5*5"}}, "X = 5+7");
  RuleParaphraser rules;
  const AttackResult direct = SpAttack(p, plain, rules);

  OracleCache cache;
  ScriptedSolver inner({{fixtures::kBooksParaphrased, "X = 5*5"}}, "X = 5+7");
  CachingSolver solver(inner, cache);
  CachingParaphraser paraphraser(rules, cache);
  for (int round = 0; round < 2; ++round) {
    EXPECT_EQ(ToJson(SpAttack(p, solver, paraphraser)), ToJson(direct));
  }
  EXPECT_EQ(inner.calls(), direct.queries_used);
}

TEST(OracleCacheTest, ConcurrentUse) {
  OracleCache cache;
  ScriptedSolver inner({}, "X = 2");
  CachingSolver solver(inner, cache);
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&] {
      for (int i = 0; i < 200; ++i) {
        EXPECT_EQ(solver.Solve("x", "q" + std::to_string(i % 50)), "X = 2");
      }
    });
  }
  for (auto& t : threads) t.join();
  EXPECT_EQ(cache.size(), 50u);
  EXPECT_LE(inner.calls(), 200u);
}

TEST(HttpSolverTest, RoundTrip) {
  FakeService service;
  SolverEndpoint e = Endpoint(service.url());
  e.bearer_token = "secret";
  HttpSolver solver(e);
  EXPECT_EQ(solver.Solve("t1", fixtures::kBooks), "X = 5+7");
  EXPECT_EQ(solver.calls(), 1u);
  EXPECT_EQ(service.last_auth(), "Bearer secret");
  EXPECT_EQ(solver.name(), "fake");
}

TEST(HttpSolverTest, MalformedResponses) {
  FakeService service;
  HttpSolver solver(Endpoint(service.url()));
  for (auto mode : {FakeService::Mode::kServerError, FakeService::Mode::kMissingField,
                    FakeService::Mode::kWrongId, FakeService::Mode::kNotJson}) {
    service.set_mode(mode);
    EXPECT_EQ(CodeOf([&] { solver.Solve("t1", "How many?"); }),
              ErrorCode::kMalformedResponse);
  }
  // Malformed answers are not retried.
  EXPECT_EQ(solver.calls(), 4u);
}

TEST(HttpSolverTest, RetryBoundOnUnavailable) {
  FakeService service;
  service.set_mode(FakeService::Mode::kUnavailable);
  for (int retries : {0, 1, 3}) {
    HttpSolver solver(Endpoint(service.url(), retries));
    const int before = service.hits();
    EXPECT_EQ(CodeOf([&] { solver.Solve("t1", "How many?"); }),
              ErrorCode::kOracleUnavailable);
    EXPECT_EQ(service.hits() - before, retries + 1);
    EXPECT_EQ(solver.calls(), static_cast<size_t>(retries + 1));
  }
}

TEST(HttpSolverTest, RecoversWithinRetries) {
  FakeService service;
  service.set_mode(FakeService::Mode::kFlakyThenOk);
  HttpSolver solver(Endpoint(service.url(), 2));
  EXPECT_EQ(solver.Solve("t1", "How many?"), "X = 5+7");
  EXPECT_EQ(service.hits(), 3);
}

TEST(HttpSolverTest, TimeoutCountsAsUnavailable) {
  FakeService service;
  service.set_mode(FakeService::Mode::kSlow);
  SolverEndpoint e = Endpoint(service.url(), 1);
  e.timeout = std::chrono::milliseconds(100);
  HttpSolver solver(e);
  EXPECT_EQ(CodeOf([&] { solver.Solve("t1", "How many?"); }),
            ErrorCode::kOracleUnavailable);
  EXPECT_EQ(solver.calls(), 2u);
}

TEST(HttpSolverTest, UnreachableHost) {
  std::string url;
  {
    FakeService service;
    url = service.url();
  }
  HttpSolver solver(Endpoint(url, 1));
  EXPECT_EQ(CodeOf([&] { solver.Solve("t1", "How many?"); }),
            ErrorCode::kOracleUnavailable);
  EXPECT_EQ(solver.calls(), 2u);
}

TEST(HttpSolverTest, ValidatesEndpoint) {
  EXPECT_EQ(CodeOf([] { HttpSolver s(Endpoint("localhost:80")); }),
            ErrorCode::kInvalidConfig);
  SolverEndpoint e = Endpoint("http://x");
  e.retries = -1;
  EXPECT_EQ(CodeOf([&] { HttpSolver s(e); }), ErrorCode::kInvalidConfig);
  e = Endpoint("http://x");
  e.timeout = std::chrono::milliseconds(0);
  EXPECT_EQ(CodeOf([&] { HttpSolver s(e); }), ErrorCode::kInvalidConfig);
  HttpSolver ok(Endpoint("http://x"));
  EXPECT_THROW(ok.Solve("t1", ""), std::invalid_argument);
}

ParaphraseProviderConfig Remote(const std::string& url) {
  ParaphraseProviderConfig c;
  c.kind = ProviderKind::kRemote;
  c.base_url = url;
  c.timeout = std::chrono::milliseconds(2000);
  return c;
}

TEST(HttpParaphraserTest, RoundTripAndHealth) {
  FakeService service;
  HttpParaphraser p(Remote(service.url()));
  EXPECT_TRUE(p.Healthy());
  EXPECT_EQ(GetParaphrases(p, "Tim has 5 books.", 2),
            (std::vector<std::string>{"Tim has got 5 books.",
                                      "There are 5 books in Tim's possession."}));
  EXPECT_EQ(GetParaphrases(p, "Tim has 5 books.", 1).size(), 1u);
  EXPECT_TRUE(GetParaphrases(p, "Unmatched weird text", 3).empty());
}

TEST(HttpParaphraserTest, Failures) {
  FakeService service;
  HttpParaphraser p(Remote(service.url()));
  service.set_mode(FakeService::Mode::kMissingField);
  EXPECT_EQ(CodeOf([&] { p.Paraphrase("Tim has 5 books.", 2); }),
            ErrorCode::kMalformedResponse);
  service.set_mode(FakeService::Mode::kUnavailable);
  EXPECT_EQ(CodeOf([&] { p.Paraphrase("Tim has 5 books.", 2); }),
            ErrorCode::kOracleUnavailable);
}

TEST(ParaphraseProviderConfigTest, Validation) {
  ParaphraseProviderConfig remote;
  remote.kind = ProviderKind::kRemote;
  EXPECT_EQ(CodeOf([&] { MakeParaphraser(remote); }), ErrorCode::kInvalidConfig);
  ParaphraseProviderConfig rules;
  EXPECT_EQ(MakeParaphraser(rules)->name(), "rule-based");
  rules.m_default = 0;
  EXPECT_EQ(CodeOf([&] { MakeParaphraser(rules); }), ErrorCode::kInvalidConfig);
}

}  // namespace
}  // namespace mwp
