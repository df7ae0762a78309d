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

#include "mwp/dataset.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "json.hpp"
#include "mwp/error.h"
#include "mwp/text.h"

namespace mwp {
namespace {

using nlohmann::json;

std::string Trim(std::string_view text) {
  const auto begin = text.find_first_not_of(" \t\r\n");
  if (begin == std::string_view::npos) return "";
  const auto end = text.find_last_not_of(" \t\r\n");
  return std::string(text.substr(begin, end - begin + 1));
}

bool IsUnknown(std::string_view side) {
  const std::string t = Trim(side);
  return t == "x" || t == "X";
}

[[noreturn]] void FormatFail(std::string_view origin, const std::string& where,
                             const std::string& what) {
  throw Error(ErrorCode::kFormatError,
              std::string(origin) + ": " + where + ": " + what);
}

std::optional<Rational> JsonRational(const json& value) {
  if (value.is_number_integer()) {
    return value.is_number_unsigned() ? Rational(value.get<uint64_t>())
                                      : Rational(value.get<int64_t>());
  }
  if (value.is_number_float()) {
    // The shortest round-trip form recovers the decimal the file spelled.
    if (auto exact = ParseRational(value.dump())) return exact;
    return FromDouble(value.get<double>());
  }
  if (value.is_string()) return ParseRational(Trim(value.get<std::string>()));
  return std::nullopt;
}

std::string JsonId(const json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return value.dump();
  return "";
}

void CollectLiterals(const Expr& expr, std::vector<Rational>& out) {
  if (expr.is_literal()) {
    out.push_back(expr.value() < 0 ? Rational(-expr.value()) : expr.value());
    return;
  }
  CollectLiterals(expr.lhs(), out);
  CollectLiterals(expr.rhs(), out);
}

// Records the equation could not be normalized for carry this marker so the
// consistency check reports the parse error instead of a missing field.
std::string EquationOrRaw(std::string_view raw) {
  try {
    return NormalizeEquationText(raw);
  } catch (const Error&) {
    return std::string(raw);
  }
}

struct Pending {
  DatasetRecord record;
  std::string location;
  // Set when the answer had to be derived and derivation failed.
  std::vector<std::string> early_reasons;
};

void Fill(Pending& pending, const std::optional<Rational>& answer) {
  if (answer) {
    pending.record.answer = *answer;
    return;
  }
  try {
    pending.record.answer =
        EvaluateEquation(ParseEquation(pending.record.equation));
  } catch (const Error& e) {
    pending.early_reasons.push_back(std::string("equation: ") + e.what());
  }
}

std::vector<Pending> ReadMaWPS(std::string_view content, std::string_view origin) {
  json root = json::parse(content, nullptr, false);
  if (root.is_discarded()) FormatFail(origin, "document", "invalid JSON");
  if (!root.is_array()) FormatFail(origin, "document", "expected a JSON array");
  if (root.empty()) FormatFail(origin, "document", "no records");
  std::vector<Pending> out;
  for (size_t i = 0; i < root.size(); ++i) {
    const json& item = root[i];
    const std::string where = "record " + std::to_string(i + 1);
    if (!item.is_object()) FormatFail(origin, where, "expected an object");
    if (!item.contains("sQuestion") || !item["sQuestion"].is_string()) {
      FormatFail(origin, where, "missing string field 'sQuestion'");
    }
    if (!item.contains("lEquations") || !item["lEquations"].is_array()) {
      FormatFail(origin, where, "missing array field 'lEquations'");
    }
    Pending pending;
    pending.location = where;
    pending.record.source = DatasetSource::kMaWPS;
    pending.record.id = item.contains("iIndex") ? JsonId(item["iIndex"]) : "";
    if (pending.record.id.empty()) pending.record.id = "mawps-" + std::to_string(i + 1);
    pending.record.text = item["sQuestion"].get<std::string>();
    const json& equations = item["lEquations"];
    if (equations.size() != 1 || !equations[0].is_string()) {
      pending.early_reasons.push_back(
          "expected exactly one equation, found " +
          std::to_string(equations.size()));
      out.push_back(std::move(pending));
      continue;
    }
    pending.record.equation = EquationOrRaw(equations[0].get<std::string>());
    std::optional<Rational> answer;
    if (item.contains("lSolutions") && item["lSolutions"].is_array() &&
        !item["lSolutions"].empty()) {
      answer = JsonRational(item["lSolutions"][0]);
      if (!answer) FormatFail(origin, where, "lSolutions[0] is not a number");
    }
    Fill(pending, answer);
    out.push_back(std::move(pending));
  }
  return out;
}

std::vector<Pending> ReadASDivA(std::string_view content,
                                std::string_view origin) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  std::istringstream in{std::string(content)};
  try {
    pt::read_xml(in, tree, pt::xml_parser::trim_whitespace);
  } catch (const pt::xml_parser_error& e) {
    FormatFail(origin, "line " + std::to_string(e.line()), e.message());
  }
  // Problems may sit under <Machine-Reading-Corpus-File><ProblemSet> or
  // directly under a root element.
  std::vector<const pt::ptree*> problems;
  std::vector<const pt::ptree*> stack = {&tree};
  while (!stack.empty()) {
    const pt::ptree* node = stack.back();
    stack.pop_back();
    std::vector<const pt::ptree*> children;
    for (const auto& [tag, child] : *node) {
      if (tag == "Problem") {
        problems.push_back(&child);
      } else if (tag != "<xmlattr>") {
        children.push_back(&child);
      }
    }
    stack.insert(stack.end(), children.rbegin(), children.rend());
  }
  if (problems.empty()) FormatFail(origin, "document", "no <Problem> elements");

  std::vector<Pending> out;
  for (size_t i = 0; i < problems.size(); ++i) {
    const pt::ptree& p = *problems[i];
    const std::string where = "record " + std::to_string(i + 1);
    const auto body = p.get_optional<std::string>("Body");
    const auto question = p.get_optional<std::string>("Question");
    const auto formula = p.get_optional<std::string>("Formula");
    const auto answer_text = p.get_optional<std::string>("Answer");
    if (!body || !question || !formula || !answer_text) {
      FormatFail(origin, where,
                 "<Problem> needs <Body>, <Question>, <Answer> and <Formula>");
    }
    Pending pending;
    pending.location = where;
    pending.record.source = DatasetSource::kASDivA;
    pending.record.id = p.get<std::string>("<xmlattr>.ID", "");
    if (pending.record.id.empty()) pending.record.id = "asdiv-" + std::to_string(i + 1);
    pending.record.text = Trim(*body) + " " + Trim(*question);
    // "7+2=9": the left side is the expression, the right the result.
    const auto eq = formula->rfind('=');
    pending.record.equation =
        "X = " + Trim(eq == std::string::npos ? std::string_view(*formula)
                                              : std::string_view(*formula).substr(0, eq));
    // "9 (apples)": the unit in brackets is dropped.
    const std::string answer_head = Trim(answer_text->substr(0, answer_text->find('(')));
    const auto answer = ParseRational(answer_head);
    if (!answer) {
      pending.early_reasons.push_back("answer '" + *answer_text + "' is not a number");
    } else {
      pending.record.answer = *answer;
    }
    out.push_back(std::move(pending));
  }
  return out;
}

std::vector<Pending> ReadGeneric(std::string_view content,
                                 std::string_view origin) {
  std::vector<Pending> out;
  std::istringstream in{std::string(content)};
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    const std::string where = "line " + std::to_string(line_no);
    json item = json::parse(line, nullptr, false);
    if (item.is_discarded()) FormatFail(origin, where, "invalid JSON");
    if (!item.is_object()) FormatFail(origin, where, "expected a JSON object");
    if (!item.contains("text") || !item["text"].is_string()) {
      FormatFail(origin, where, "missing string field 'text'");
    }
    if (!item.contains("equation") || !item["equation"].is_string()) {
      FormatFail(origin, where, "missing string field 'equation'");
    }
    Pending pending;
    pending.location = where;
    pending.record.id = item.contains("id") ? JsonId(item["id"]) : "";
    if (pending.record.id.empty()) pending.record.id = "line-" + std::to_string(line_no);
    pending.record.text = item["text"].get<std::string>();
    pending.record.equation = EquationOrRaw(item["equation"].get<std::string>());
    if (item.contains("source")) {
      const auto source = item["source"].is_string()
                              ? ParseDatasetSource(item["source"].get<std::string>())
                              : std::nullopt;
      if (!source) FormatFail(origin, where, "unknown 'source'");
      pending.record.source = *source;
    }
    std::optional<Rational> answer;
    if (item.contains("answer") && !item["answer"].is_null()) {
      answer = JsonRational(item["answer"]);
      if (!answer) FormatFail(origin, where, "'answer' is not a number");
    }
    Fill(pending, answer);
    out.push_back(std::move(pending));
  }
  if (out.empty()) FormatFail(origin, "document", "no records");
  return out;
}

}  // namespace

std::string_view DatasetSourceName(DatasetSource source) {
  switch (source) {
    case DatasetSource::kMaWPS:
      return "MaWPS";
    case DatasetSource::kASDivA:
      return "ASDiv-A";
    case DatasetSource::kCustom:
      return "custom";
  }
  return "custom";
}

std::optional<DatasetSource> ParseDatasetSource(std::string_view name) {
  const std::string lower = ToLower(name);
  if (lower == "mawps") return DatasetSource::kMaWPS;
  if (lower == "asdiv-a" || lower == "asdiv") return DatasetSource::kASDivA;
  if (lower == "custom") return DatasetSource::kCustom;
  return std::nullopt;
}

std::optional<DatasetFormat> ParseDatasetFormat(std::string_view name) {
  const std::string lower = ToLower(name);
  if (lower == "mawps") return DatasetFormat::kMaWPS;
  if (lower == "asdiv-a" || lower == "asdiv") return DatasetFormat::kASDivA;
  if (lower == "generic-jsonl" || lower == "jsonl" || lower == "generic") {
    return DatasetFormat::kGenericJsonl;
  }
  return std::nullopt;
}

const std::vector<Rational>& ImplicitConstants() {
  static const std::vector<Rational> constants = {
      Rational(1, 100), Rational(1, 2), 1, 2, 7, 12, 24, 60, 100, 1000};
  return constants;
}

std::string NormalizeEquationText(std::string_view text) {
  const size_t first = text.find('=');
  if (first == std::string_view::npos) return "X = " + Trim(text);
  if (text.find('=', first + 1) != std::string_view::npos) {
    throw Error(ErrorCode::kParseError, "more than one '=' in equation");
  }
  const std::string_view lhs = text.substr(0, first);
  const std::string_view rhs = text.substr(first + 1);
  if (IsUnknown(lhs)) return "X = " + Trim(rhs);
  if (IsUnknown(rhs)) return "X = " + Trim(lhs);
  throw Error(ErrorCode::kParseError, "neither side of '=' is the unknown X");
}

std::vector<std::string> CheckRecord(const DatasetRecord& record,
                                     double tolerance) {
  std::vector<std::string> reasons;
  if (Trim(record.text).empty()) {
    reasons.push_back("empty problem text");
  } else {
    try {
      ParseProblem(record.id, record.text);
    } catch (const Error& e) {
      reasons.push_back(std::string("text: ") + e.what());
    }
  }
  std::optional<EquationAst> equation;
  try {
    equation = ParseEquation(record.equation);
  } catch (const Error& e) {
    reasons.push_back(std::string("equation: ") + e.what());
    return reasons;
  }
  try {
    const Rational value = EvaluateEquation(*equation);
    if (!AnswersEquivalent(value, record.answer, tolerance)) {
      reasons.push_back("equation evaluates to " + FormatRational(value) +
                        " but the answer is " + FormatRational(record.answer));
    }
  } catch (const Error& e) {
    reasons.push_back(std::string("equation: ") + e.what());
  }

  std::vector<Rational> literals;
  CollectLiterals(*equation->rhs, literals);
  std::vector<Rational> in_text = QuantityValues(record.text);
  for (Rational& value : in_text) {
    if (value < 0) value = -value;
  }
  const auto& constants = ImplicitConstants();
  std::set<std::string> reported;
  for (const Rational& literal : literals) {
    const bool found =
        std::find(in_text.begin(), in_text.end(), literal) != in_text.end() ||
        std::find(constants.begin(), constants.end(), literal) != constants.end();
    if (!found && reported.insert(FormatRational(literal)).second) {
      reasons.push_back("equation literal " + FormatRational(literal) +
                        " does not occur in the problem text");
    }
  }
  return reasons;
}

LoadedDataset ParseDataset(std::string_view content, DatasetFormat format,
                           double tolerance, std::string_view origin) {
  if (Trim(content).empty()) FormatFail(origin, "document", "empty file");
  std::vector<Pending> pending;
  switch (format) {
    case DatasetFormat::kMaWPS:
      pending = ReadMaWPS(content, origin);
      break;
    case DatasetFormat::kASDivA:
      pending = ReadASDivA(content, origin);
      break;
    case DatasetFormat::kGenericJsonl:
      pending = ReadGeneric(content, origin);
      break;
  }
  LoadedDataset out;
  std::set<std::string> seen;
  for (Pending& p : pending) {
    std::vector<std::string> reasons = std::move(p.early_reasons);
    if (reasons.empty()) reasons = CheckRecord(p.record, tolerance);
    if (!seen.insert(p.record.id).second) {
      reasons.push_back("duplicate id");
    }
    if (reasons.empty()) {
      out.records.push_back(std::move(p.record));
      continue;
    }
    std::string joined;
    for (const std::string& reason : reasons) {
      if (!joined.empty()) joined += "; ";
      joined += reason;
    }
    out.quarantined.push_back({p.record.id, p.location, joined});
  }
  return out;
}

LoadedDataset LoadDataset(const std::filesystem::path& path,
                          DatasetFormat format, double tolerance) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kFormatError, "cannot open dataset " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseDataset(buffer.str(), format, tolerance, path.string());
}

void WriteQuarantineReport(const std::filesystem::path& path,
                           const std::vector<QuarantinedRecord>& quarantined) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  for (const QuarantinedRecord& q : quarantined) {
    out << q.id << '\t' << q.location << '\t' << q.reason << '\n';
  }
  if (!out) throw Error(ErrorCode::kIoError, "write failed: " + path.string());
}

MathWordProblem ToProblem(const DatasetRecord& record) {
  return ParseProblem(record.id, record.text, record.equation, record.answer);
}

}  // namespace mwp
