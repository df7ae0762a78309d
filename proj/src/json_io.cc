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

#include "mwp/json_io.h"

#include <fstream>
#include <map>
#include <sstream>

#include "mwp/error.h"

namespace mwp {
namespace {

using nlohmann::json;

[[noreturn]] void Bad(const std::string& what) {
  throw Error(ErrorCode::kFormatError, what);
}

const json& Field(const json& object, const char* key) {
  if (!object.contains(key)) Bad(std::string("missing field '") + key + "'");
  return object[key];
}

std::string StringField(const json& object, const char* key) {
  const json& value = Field(object, key);
  if (!value.is_string()) Bad(std::string("field '") + key + "' is not a string");
  return value.get<std::string>();
}

bool BoolField(const json& object, const char* key) {
  const json& value = Field(object, key);
  if (!value.is_boolean()) Bad(std::string("field '") + key + "' is not a flag");
  return value.get<bool>();
}

uint64_t CountField(const json& object, const char* key) {
  const json& value = Field(object, key);
  if (!value.is_number_unsigned() &&
      !(value.is_number_integer() && value.get<int64_t>() >= 0)) {
    Bad(std::string("field '") + key + "' is not a count");
  }
  return value.get<uint64_t>();
}

std::string ReadFile(const std::filesystem::path& path, ErrorCode code) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(code, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

[[noreturn]] void BadConfig(const std::string& what) {
  throw Error(ErrorCode::kInvalidConfig, "config: " + what);
}

}  // namespace

json RationalToJson(const Rational& value) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(value) == 1 && abs(numerator(value)) < (int64_t{1} << 53)) {
    return numerator(value).convert_to<int64_t>();
  }
  const std::string text = FormatRational(value);
  if (text.find('/') == std::string::npos) {
    const json number = json::parse(text, nullptr, false);
    if (!number.is_discarded() && number.is_number() &&
        ParseRational(number.dump()) == value) {
      return number;
    }
  }
  return text;
}

Rational RationalFromJson(const json& value) {
  if (value.is_number_integer()) {
    return value.is_number_unsigned() ? Rational(value.get<uint64_t>())
                                      : Rational(value.get<int64_t>());
  }
  if (value.is_number_float()) {
    if (auto exact = ParseRational(value.dump())) return *exact;
    return FromDouble(value.get<double>());
  }
  if (value.is_string()) {
    if (auto parsed = ParseRational(value.get<std::string>())) return *parsed;
  }
  Bad("not a number: " + value.dump());
}

json ToJson(const DatasetRecord& record) {
  return {{"id", record.id},
          {"text", record.text},
          {"equation", record.equation},
          {"answer", RationalToJson(record.answer)},
          {"source", DatasetSourceName(record.source)}};
}

json ToJson(const AttackResult& r) {
  return {{"method", AttackMethodName(r.method)},
          {"problem_id", r.problem_id},
          {"original_text", r.original_text},
          {"adversarial_text", r.adversarial_text},
          {"attempted_text", r.attempted_text},
          {"original_prediction", r.original_prediction},
          {"adversarial_prediction", r.adversarial_prediction},
          {"success", r.success},
          {"originally_correct", r.originally_correct},
          {"adversarial_correct", r.adversarial_correct},
          {"queries_used", r.queries_used},
          {"search_space", r.search_space},
          {"budget", r.budget}};
}

AttackResult AttackResultFromJson(const json& value) {
  if (!value.is_object()) Bad("attack result is not an object");
  AttackResult r;
  const auto method = ParseAttackMethod(StringField(value, "method"));
  if (!method) Bad("unknown method '" + StringField(value, "method") + "'");
  r.method = *method;
  r.problem_id = StringField(value, "problem_id");
  r.original_text = StringField(value, "original_text");
  r.adversarial_text = StringField(value, "adversarial_text");
  r.attempted_text = StringField(value, "attempted_text");
  r.original_prediction = StringField(value, "original_prediction");
  r.adversarial_prediction = StringField(value, "adversarial_prediction");
  r.success = BoolField(value, "success");
  r.originally_correct = BoolField(value, "originally_correct");
  r.adversarial_correct = BoolField(value, "adversarial_correct");
  r.queries_used = CountField(value, "queries_used");
  r.search_space = CountField(value, "search_space");
  r.budget = CountField(value, "budget");
  return r;
}

void WriteResults(const std::filesystem::path& path,
                  const std::vector<CampaignReport>& reports) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  for (const CampaignReport& report : reports) {
    for (const RecordOutcome& outcome : report.outcomes) {
      json base = {{"solver", report.solver}, {"record", ToJson(outcome.record)}};
      if (outcome.errored) {
        base["errored"] = true;
        base["error"] = outcome.error;
        out << base.dump() << '\n';
        continue;
      }
      for (const AttackResult& result : outcome.attacks) {
        json line = base;
        line["errored"] = false;
        line["result"] = ToJson(result);
        out << line.dump() << '\n';
      }
    }
  }
  out.flush();
  if (!out) throw Error(ErrorCode::kIoError, "write failed: " + path.string());
}

std::vector<CampaignReport> ReadResults(const std::filesystem::path& path) {
  const std::string content = ReadFile(path, ErrorCode::kFormatError);
  std::vector<std::string> solver_order;
  // Per solver: record ids in order of first appearance and their outcomes.
  std::map<std::string, std::vector<RecordOutcome>> outcomes;
  std::map<std::string, std::map<std::string, size_t>> position;
  bool seen[2] = {false, false};

  std::istringstream in(content);
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const json value = json::parse(line, nullptr, false);
      if (value.is_discarded() || !value.is_object()) Bad("invalid JSON object");
      const std::string solver = StringField(value, "solver");
      const json& record_json = Field(value, "record");
      if (!record_json.is_object()) Bad("field 'record' is not an object");
      DatasetRecord record;
      record.id = StringField(record_json, "id");
      record.text = StringField(record_json, "text");
      record.equation = StringField(record_json, "equation");
      record.answer = RationalFromJson(Field(record_json, "answer"));
      const auto source = ParseDatasetSource(StringField(record_json, "source"));
      if (!source) Bad("unknown source");
      record.source = *source;

      if (!outcomes.count(solver)) solver_order.push_back(solver);
      auto& list = outcomes[solver];
      auto& index = position[solver];
      auto it = index.find(record.id);
      if (it == index.end()) {
        it = index.emplace(record.id, list.size()).first;
        list.push_back({record, false, "", {}});
      }
      RecordOutcome& outcome = list[it->second];
      if (BoolField(value, "errored")) {
        outcome.errored = true;
        outcome.error = value.value("error", "");
        continue;
      }
      AttackResult result = AttackResultFromJson(Field(value, "result"));
      seen[result.method == AttackMethod::kSentenceParaphrasing] = true;
      outcome.attacks.push_back(std::move(result));
    } catch (const Error& e) {
      throw Error(ErrorCode::kFormatError, path.string() + ": line " +
                                               std::to_string(line_no) + ": " +
                                               e.what());
    }
  }

  std::vector<AttackMethod> methods;
  if (seen[0]) methods.push_back(AttackMethod::kQuestionReordering);
  if (seen[1]) methods.push_back(AttackMethod::kSentenceParaphrasing);
  std::vector<CampaignReport> reports;
  for (const std::string& solver : solver_order) {
    reports.push_back(Summarize(solver, std::move(outcomes[solver]), methods));
  }
  return reports;
}

json ToJson(const CampaignConfig& config) {
  json methods = json::array();
  for (AttackMethod method : config.methods) {
    methods.push_back(AttackMethodName(method));
  }
  return {{"methods", methods},
          {"m", config.m},
          {"budget", config.budget},
          {"tol", config.tolerance},
          {"seed", config.seed},
          {"parallelism", config.parallelism},
          {"success_rule", SuccessRuleName(config.success_rule)},
          {"connective", config.reorder.connective},
          {"clause_joiner", config.reorder.clause_joiner},
          {"resolve_pronouns", config.reorder.resolve_pronouns}};
}

CampaignConfig ConfigFromJson(const json& value, CampaignConfig base) {
  if (!value.is_object()) BadConfig("expected a JSON object");
  auto integer = [&](const std::string& key, int64_t min) {
    const json& v = value[key];
    if (!v.is_number_integer() || v.get<int64_t>() < min) {
      BadConfig("'" + key + "' must be an integer >= " + std::to_string(min));
    }
    return v.get<int64_t>();
  };
  auto text = [&](const std::string& key) {
    if (!value[key].is_string()) BadConfig("'" + key + "' must be a string");
    return value[key].get<std::string>();
  };
  for (const auto& [key, v] : value.items()) {
    if (key == "methods") {
      if (!v.is_array()) BadConfig("'methods' must be an array");
      base.methods.clear();
      for (const json& name : v) {
        const auto method =
            name.is_string() ? ParseAttackMethod(name.get<std::string>())
                             : std::nullopt;
        if (!method) BadConfig("unknown method " + name.dump());
        base.methods.push_back(*method);
      }
    } else if (key == "m") {
      base.m = static_cast<int>(integer(key, 1));
    } else if (key == "budget") {
      base.budget = static_cast<uint64_t>(integer(key, 1));
    } else if (key == "tol") {
      if (!v.is_number() || v.get<double>() < 0) BadConfig("'tol' must be >= 0");
      base.tolerance = v.get<double>();
    } else if (key == "seed") {
      base.seed = integer(key, INT64_MIN);
    } else if (key == "parallelism") {
      base.parallelism = static_cast<int>(integer(key, 1));
    } else if (key == "success_rule") {
      const auto rule = ParseSuccessRule(text(key));
      if (!rule) BadConfig("unknown success_rule '" + text(key) + "'");
      base.success_rule = *rule;
    } else if (key == "connective") {
      base.reorder.connective = text(key);
    } else if (key == "clause_joiner") {
      base.reorder.clause_joiner = text(key);
    } else if (key == "resolve_pronouns") {
      if (!v.is_boolean()) BadConfig("'resolve_pronouns' must be a flag");
      base.reorder.resolve_pronouns = v.get<bool>();
    } else {
      BadConfig("unknown key '" + key + "'");
    }
  }
  Validate(base);
  return base;
}

std::unique_ptr<ScriptedSolver> LoadScriptedSolver(
    const std::filesystem::path& path, const std::string& name) {
  const json value =
      json::parse(ReadFile(path, ErrorCode::kInvalidConfig), nullptr, false);
  if (value.is_discarded() || !value.is_object() || !value.contains("script") ||
      !value["script"].is_object()) {
    BadConfig(path.string() + ": expected {\"script\": {text: equation}}");
  }
  std::map<std::string, std::string> script;
  for (const auto& [text, equation] : value["script"].items()) {
    if (!equation.is_string()) BadConfig(path.string() + ": non-string equation");
    script[text] = equation.get<std::string>();
  }
  const std::string fallback = value.value("fallback", "X = 0");
  return std::make_unique<ScriptedSolver>(
      script, fallback, name.empty() ? value.value("name", "scripted") : name);
}

}  // namespace mwp
