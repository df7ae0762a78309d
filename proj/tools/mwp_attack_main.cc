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

// Command-line front end: attack, report, export-augment, annotate and
// aggregate-annotations.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mwp/annotation.h"
#include "mwp/campaign.h"
#include "mwp/dataset.h"
#include "mwp/error.h"
#include "mwp/http_oracle.h"
#include "mwp/json_io.h"
#include "mwp/oracle_cache.h"
#include "mwp/report.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFormat = 2;
constexpr int kExitOracle = 3;
constexpr int kExitConfig = 4;

int ExitCodeFor(mwp::ErrorCode code) {
  switch (code) {
    case mwp::ErrorCode::kOracleUnavailable:
    case mwp::ErrorCode::kMalformedResponse:
      return kExitOracle;
    case mwp::ErrorCode::kInvalidConfig:
      return kExitConfig;
    default:
      return kExitFormat;
  }
}

// "name=value" or bare "value"; the bare form takes `fallback_name`.
std::pair<std::string, std::string> SplitNamed(const std::string& entry,
                                               const std::string& fallback_name) {
  const auto eq = entry.find('=');
  if (eq == std::string::npos || entry.rfind("http", 0) == 0) {
    return {fallback_name, entry};
  }
  return {entry.substr(0, eq), entry.substr(eq + 1)};
}

std::vector<std::string> SplitCommas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void WriteText(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::trunc);
  out << text;
  if (!out) throw mwp::Error(mwp::ErrorCode::kIoError, "cannot write " + path);
}

struct AttackArgs {
  std::string dataset;
  std::string format = "generic-jsonl";
  std::vector<std::string> solver_urls;
  std::vector<std::string> solver_scripts;
  std::string paraphrase_url;
  bool rule_paraphraser = false;
  std::string methods;
  int m = 7;
  uint64_t budget = 512;
  int64_t seed = 0;
  double tol = mwp::kDefaultAnswerTolerance;
  int parallelism = 1;
  std::string success_rule;
  std::string config;
  std::string cache;
  std::string out = "results.jsonl";
  std::string quarantine;
  int timeout_ms = 10000;
  int retries = 2;
  std::string token;
};

int RunAttack(const AttackArgs& args, const CLI::App& cmd) {
  mwp::CampaignConfig config;
  if (!args.config.empty()) {
    std::ifstream in(args.config);
    if (!in) {
      throw mwp::Error(mwp::ErrorCode::kInvalidConfig,
                       "cannot open config " + args.config);
    }
    const auto value = nlohmann::json::parse(in, nullptr, false);
    if (value.is_discarded()) {
      throw mwp::Error(mwp::ErrorCode::kInvalidConfig,
                       args.config + ": invalid JSON");
    }
    config = mwp::ConfigFromJson(value);
  }
  // Flags given on the command line override the config file.
  auto given = [&](const char* flag) { return cmd.count(flag) > 0; };
  if (given("--methods")) {
    config.methods.clear();
    for (const std::string& name : SplitCommas(args.methods)) {
      const auto method = mwp::ParseAttackMethod(name);
      if (!method) {
        throw mwp::Error(mwp::ErrorCode::kInvalidConfig,
                         "unknown method '" + name + "'");
      }
      config.methods.push_back(*method);
    }
  }
  if (given("--m")) config.m = args.m;
  if (given("--budget")) config.budget = args.budget;
  if (given("--seed")) config.seed = args.seed;
  if (given("--tol")) config.tolerance = args.tol;
  if (given("--parallelism")) config.parallelism = args.parallelism;
  if (given("--success-rule")) {
    const auto rule = mwp::ParseSuccessRule(args.success_rule);
    if (!rule) {
      throw mwp::Error(mwp::ErrorCode::kInvalidConfig,
                       "unknown success rule '" + args.success_rule + "'");
    }
    config.success_rule = *rule;
  }
  mwp::Validate(config);

  const auto format = mwp::ParseDatasetFormat(args.format);
  if (!format) {
    throw mwp::Error(mwp::ErrorCode::kInvalidConfig,
                     "unknown dataset format '" + args.format + "'");
  }

  // Oracles.
  std::vector<std::unique_ptr<mwp::SolverOracle>> solvers;
  for (const std::string& entry : args.solver_urls) {
    auto [name, url] = SplitNamed(entry, "solver");
    mwp::SolverEndpoint endpoint;
    endpoint.base_url = url;
    endpoint.name = name;
    endpoint.timeout = std::chrono::milliseconds(args.timeout_ms);
    endpoint.retries = args.retries;
    endpoint.bearer_token = args.token;
    solvers.push_back(std::make_unique<mwp::HttpSolver>(endpoint));
  }
  for (const std::string& entry : args.solver_scripts) {
    auto [name, path] = SplitNamed(entry, "");
    solvers.push_back(mwp::LoadScriptedSolver(path, name));
  }
  if (solvers.empty()) {
    throw mwp::Error(mwp::ErrorCode::kInvalidConfig,
                     "give at least one --solver-url or --solver-script");
  }
  for (size_t i = 0; i < solvers.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      if (solvers[i]->name() == solvers[j]->name()) {
        throw mwp::Error(mwp::ErrorCode::kInvalidConfig,
                         "two solvers named '" + solvers[i]->name() +
                             "'; use name=url to tell them apart");
      }
    }
  }

  mwp::ParaphraseProviderConfig provider_config;
  provider_config.m_default = config.m;
  provider_config.timeout = std::chrono::milliseconds(args.timeout_ms);
  provider_config.retries = args.retries;
  provider_config.bearer_token = args.token;
  if (!args.paraphrase_url.empty()) {
    provider_config.kind = mwp::ProviderKind::kRemote;
    provider_config.base_url = args.paraphrase_url;
  } else if (!args.rule_paraphraser &&
             std::find(config.methods.begin(), config.methods.end(),
                       mwp::AttackMethod::kSentenceParaphrasing) !=
                 config.methods.end()) {
    throw mwp::Error(mwp::ErrorCode::kInvalidConfig,
                     "SP needs --paraphrase-url or --rule-paraphraser");
  }
  auto provider = mwp::MakeParaphraser(provider_config);

  std::unique_ptr<mwp::OracleCache> cache;
  if (!args.cache.empty()) {
    cache = std::make_unique<mwp::OracleCache>(args.cache);
  }

  // Data.
  const mwp::LoadedDataset data =
      mwp::LoadDataset(args.dataset, *format, config.tolerance);
  const std::string quarantine_path =
      args.quarantine.empty() ? args.out + ".quarantine.tsv" : args.quarantine;
  mwp::WriteQuarantineReport(quarantine_path, data.quarantined);
  std::cerr << "loaded " << data.records.size() << " record(s), quarantined "
            << data.quarantined.size() << " (see " << quarantine_path << ")\n";

  std::vector<mwp::CampaignReport> reports;
  bool all_unreachable = !data.records.empty();
  for (auto& solver : solvers) {
    std::optional<mwp::CachingSolver> cached_solver;
    std::optional<mwp::CachingParaphraser> cached_provider;
    mwp::SolverOracle* s = solver.get();
    mwp::ParaphraseOracle* p = provider.get();
    if (cache) {
      s = &cached_solver.emplace(*solver, *cache);
      p = &cached_provider.emplace(*provider, *cache);
    }
    reports.push_back(mwp::RunCampaign(data.records, *s, *p, config));
    const mwp::CampaignReport& report = reports.back();
    if (report.errored > 0) {
      std::cerr << report.solver << ": " << report.errored
                << " record(s) errored; first: ";
      for (const auto& outcome : report.outcomes) {
        if (outcome.errored) {
          std::cerr << outcome.error << "\n";
          break;
        }
      }
    }
    all_unreachable = all_unreachable && report.errored == report.outcomes.size();
  }
  mwp::WriteResults(args.out, reports);
  std::cout << mwp::RenderReport(reports);
  return all_unreachable ? kExitOracle : kExitOk;
}

int RunReport(const std::string& results, const std::string& json_out) {
  const auto reports = mwp::ReadResults(results);
  std::cout << mwp::RenderReport(reports);
  if (!json_out.empty()) {
    WriteText(json_out, mwp::ReportToJson(reports).dump(2) + "\n");
  }
  return kExitOk;
}

int RunExport(const std::string& results, const std::string& out,
              const std::string& filter) {
  const auto reports = mwp::ReadResults(results);
  std::function<bool(const std::string&)> keep;
  std::set<std::string> kept;
  if (!filter.empty()) {
    kept = mwp::MajoritySameEquation(mwp::ReadAnnotations(filter));
    keep = [&](const std::string& id) { return kept.count(id) > 0; };
  }
  const size_t written = mwp::ExportAdversarialTrainingSet(reports, out, keep);
  std::cout << "wrote " << written << " adversarial record(s) to " << out << "\n";
  return kExitOk;
}

int RunAnnotate(const std::string& results, const std::string& annotator,
                const std::string& out) {
  const auto items = mwp::AnnotationItems(mwp::ReadResults(results));
  const auto written = mwp::Annotate(items, annotator, std::cin, std::cout, out);
  std::cout << "\nrecorded " << written.size() << " annotation(s) in " << out
            << "\n";
  return kExitOk;
}

int RunAggregate(const std::vector<std::string>& paths,
                 const std::string& json_out) {
  std::vector<mwp::AnnotationRecord> records;
  for (const std::string& path : paths) {
    if (!std::filesystem::exists(path)) {
      throw mwp::Error(mwp::ErrorCode::kFormatError, "no such file " + path);
    }
    auto more = mwp::ReadAnnotations(path);
    records.insert(records.end(), more.begin(), more.end());
  }
  const auto summary = mwp::AggregateAnnotations(records);
  nlohmann::json json = nlohmann::json::object();
  std::printf("%-10s %9s %9s %12s %14s\n", "Dataset", "Examples",
              "Same eq.", "Similarity", "Grammaticality");
  for (const auto& [dataset, s] : summary) {
    std::printf("%-10s %9zu %8.1f%% %12.2f %14.2f\n", dataset.c_str(),
                s.examples, s.same_equation_percent, s.mean_similarity,
                s.mean_grammaticality);
    json[dataset] = {{"examples", s.examples},
                     {"annotations", s.annotations},
                     {"same_equation_percent", s.same_equation_percent},
                     {"mean_similarity", s.mean_similarity},
                     {"mean_grammaticality", s.mean_grammaticality}};
  }
  if (!json_out.empty()) WriteText(json_out, json.dump(2) + "\n");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Black-box adversarial attacks on math word problem solvers"};
  app.require_subcommand(1);

  AttackArgs attack;
  auto* attack_cmd = app.add_subcommand("attack", "Run an attack campaign");
  attack_cmd->add_option("--dataset", attack.dataset, "Dataset file")->required();
  attack_cmd->add_option("--format", attack.format,
                         "mawps, asdiv-a or generic-jsonl")
      ->capture_default_str();
  attack_cmd->add_option("--solver-url", attack.solver_urls,
                         "[name=]base URL of a solver service (repeatable)");
  attack_cmd->add_option("--solver-script", attack.solver_scripts,
                         "[name=]path of a scripted solver JSON (repeatable)");
  auto* remote = attack_cmd->add_option("--paraphrase-url", attack.paraphrase_url,
                                        "Base URL of a paraphrase service");
  auto* rules = attack_cmd->add_flag("--rule-paraphraser", attack.rule_paraphraser,
                                     "Use the built-in rule paraphraser");
  remote->excludes(rules);
  attack_cmd->add_option("--methods", attack.methods, "Comma list of qr, sp");
  attack_cmd->add_option("--m", attack.m, "Paraphrases per sentence");
  attack_cmd->add_option("--budget", attack.budget, "SP query budget");
  attack_cmd->add_option("--seed", attack.seed, "Recorded seed");
  attack_cmd->add_option("--tol", attack.tol, "Answer tolerance");
  attack_cmd->add_option("--parallelism", attack.parallelism, "Worker count");
  attack_cmd->add_option("--success-rule", attack.success_rule,
                         "verdict or prediction-change");
  attack_cmd->add_option("--config", attack.config, "Campaign config JSON");
  attack_cmd->add_option("--cache", attack.cache, "Oracle response cache file");
  attack_cmd->add_option("--out", attack.out, "Results file")->capture_default_str();
  attack_cmd->add_option("--quarantine", attack.quarantine,
                         "Quarantine reasons file (default <out>.quarantine.tsv)");
  attack_cmd->add_option("--timeout-ms", attack.timeout_ms, "Per-request timeout")
      ->capture_default_str();
  attack_cmd->add_option("--retries", attack.retries, "Retries per request")
      ->capture_default_str();
  attack_cmd->add_option("--token", attack.token, "Bearer token for services");

  std::string results, json_out, out, filter, annotator;
  std::vector<std::string> annotation_files;
  auto* report_cmd = app.add_subcommand("report", "Render a results file");
  report_cmd->add_option("--results", results, "Results file")->required();
  report_cmd->add_option("--json", json_out, "Also write the JSON twin here");

  auto* export_cmd =
      app.add_subcommand("export-augment", "Export adversarial training records");
  export_cmd->add_option("--results", results, "Results file")->required();
  export_cmd->add_option("--out", out, "Output JSONL")->required();
  export_cmd->add_option("--filter", filter,
                         "Annotations file; keep majority same-equation only");

  auto* annotate_cmd =
      app.add_subcommand("annotate", "Judge successful adversarial examples");
  annotate_cmd->add_option("--results", results, "Results file")->required();
  annotate_cmd->add_option("--annotator", annotator, "Annotator id")->required();
  annotate_cmd->add_option("--out", out, "Annotations JSONL (appended)")
      ->required();

  auto* aggregate_cmd = app.add_subcommand("aggregate-annotations",
                                           "Summarize annotations per dataset");
  aggregate_cmd->add_option("annotations", annotation_files, "Annotation files")
      ->required();
  aggregate_cmd->add_option("--json", json_out, "Also write JSON here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*attack_cmd) return RunAttack(attack, *attack_cmd);
    if (*report_cmd) return RunReport(results, json_out);
    if (*export_cmd) return RunExport(results, out, filter);
    if (*annotate_cmd) return RunAnnotate(results, annotator, out);
    if (*aggregate_cmd) return RunAggregate(annotation_files, json_out);
  } catch (const mwp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ExitCodeFor(e.code());
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitOk;
}
