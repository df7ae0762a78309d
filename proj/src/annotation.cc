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

#include "mwp/annotation.h"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "mwp/error.h"
#include "mwp/text.h"

namespace mwp {
namespace {

using nlohmann::json;

std::string Trim(const std::string& text) {
  const auto begin = text.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  return text.substr(begin, text.find_last_not_of(" \t\r\n") - begin + 1);
}

// Prompts until `parse` accepts the answer; nullopt at end of input.
template <typename T, typename Parse>
std::optional<T> Ask(std::istream& in, std::ostream& out,
                     const std::string& prompt, Parse parse) {
  std::string line;
  while (true) {
    out << prompt << std::flush;
    if (!std::getline(in, line)) return std::nullopt;
    if (auto value = parse(Trim(line))) return value;
    out << "  invalid answer, try again\n";
  }
}

std::optional<bool> ParseYesNo(const std::string& answer) {
  const std::string lower = ToLower(answer);
  if (lower == "y" || lower == "yes") return true;
  if (lower == "n" || lower == "no") return false;
  return std::nullopt;
}

std::optional<double> ParseSimilarity(const std::string& answer) {
  try {
    size_t used = 0;
    const double value = std::stod(answer, &used);
    if (used == answer.size() && value >= 0 && value <= 1) return value;
  } catch (const std::exception&) {
  }
  return std::nullopt;
}

std::optional<int> ParseGrammaticality(const std::string& answer) {
  if (answer.size() == 1 && answer[0] >= '1' && answer[0] <= '5') {
    return answer[0] - '0';
  }
  return std::nullopt;
}

}  // namespace

void Validate(const AnnotationRecord& record) {
  if (record.example_id.empty() || record.annotator.empty()) {
    throw std::invalid_argument("annotation needs an example id and annotator");
  }
  if (!(record.similarity >= 0 && record.similarity <= 1)) {
    throw std::invalid_argument("similarity must lie in [0, 1]");
  }
  if (record.grammaticality < 1 || record.grammaticality > 5) {
    throw std::invalid_argument("grammaticality must lie in 1..5");
  }
}

json ToJson(const AnnotationRecord& r) {
  return {{"example_id", r.example_id},   {"dataset", r.dataset},
          {"annotator", r.annotator},     {"same_equation", r.same_equation},
          {"similarity", r.similarity},   {"grammaticality", r.grammaticality}};
}

AnnotationRecord AnnotationFromJson(const json& value) {
  AnnotationRecord r;
  try {
    r.example_id = value.at("example_id").get<std::string>();
    r.dataset = value.value("dataset", "");
    r.annotator = value.at("annotator").get<std::string>();
    r.same_equation = value.at("same_equation").get<bool>();
    r.similarity = value.at("similarity").get<double>();
    r.grammaticality = value.at("grammaticality").get<int>();
    Validate(r);
  } catch (const std::exception& e) {
    throw Error(ErrorCode::kFormatError, std::string("annotation: ") + e.what());
  }
  return r;
}

std::vector<AnnotationRecord> ReadAnnotations(const std::filesystem::path& path) {
  std::vector<AnnotationRecord> records;
  std::ifstream in(path);
  if (!in) return records;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    const json value = json::parse(line, nullptr, false);
    if (value.is_discarded() || !value.is_object()) {
      throw Error(ErrorCode::kFormatError, path.string() + ": line " +
                                               std::to_string(line_no) +
                                               ": invalid JSON object");
    }
    try {
      records.push_back(AnnotationFromJson(value));
    } catch (const Error& e) {
      throw Error(ErrorCode::kFormatError, path.string() + ": line " +
                                               std::to_string(line_no) + ": " +
                                               e.what());
    }
  }
  return records;
}

std::vector<AnnotationItem> AnnotationItems(
    const std::vector<CampaignReport>& reports) {
  std::vector<AnnotationItem> items;
  for (const CampaignReport& report : reports) {
    for (const RecordOutcome& outcome : report.outcomes) {
      if (outcome.errored) continue;
      for (const AttackResult& result : outcome.attacks) {
        if (!result.success) continue;
        items.push_back({AdversarialId(outcome.record.id, result.method,
                                       reports.size() > 1 ? report.solver : ""),
                         std::string(DatasetSourceName(outcome.record.source)),
                         result.original_text, result.adversarial_text});
      }
    }
  }
  return items;
}

std::vector<AnnotationRecord> Annotate(const std::vector<AnnotationItem>& items,
                                       const std::string& annotator,
                                       std::istream& in, std::ostream& out,
                                       const std::filesystem::path& out_path) {
  if (annotator.empty()) throw std::invalid_argument("annotator id is empty");
  std::set<std::string> done;
  for (const AnnotationRecord& r : ReadAnnotations(out_path)) {
    if (r.annotator == annotator) done.insert(r.example_id);
  }
  std::ofstream sink(out_path, std::ios::app);
  if (!sink) throw Error(ErrorCode::kIoError, "cannot write " + out_path.string());

  std::vector<AnnotationRecord> written;
  size_t remaining = 0;
  for (const AnnotationItem& item : items) remaining += !done.count(item.example_id);
  size_t position = 0;
  for (const AnnotationItem& item : items) {
    if (done.count(item.example_id)) continue;
    ++position;
    out << "\n[" << position << "/" << remaining << "] " << item.example_id
        << "\nOriginal:    " << item.original_text
        << "\nAdversarial: " << item.adversarial_text << "\n";
    const auto same = Ask<bool>(
        in, out, "Do both texts lead to the same linear equation? [yes/no] ",
        ParseYesNo);
    if (!same) break;
    const auto similarity = Ask<double>(
        in, out, "How similar are the two texts in meaning? [0 to 1] ",
        ParseSimilarity);
    if (!similarity) break;
    const auto grammar = Ask<int>(
        in, out, "How grammatical is the adversarial text? [1 to 5] ",
        ParseGrammaticality);
    if (!grammar) break;

    AnnotationRecord record{item.example_id, item.dataset, annotator,
                            *same,           *similarity,  *grammar};
    sink << ToJson(record).dump() << '\n';
    sink.flush();
    if (!sink) throw Error(ErrorCode::kIoError, "write failed: " + out_path.string());
    done.insert(item.example_id);
    written.push_back(std::move(record));
  }
  return written;
}

std::map<std::string, AnnotationSummary> AggregateAnnotations(
    const std::vector<AnnotationRecord>& records) {
  if (records.empty()) throw Error(ErrorCode::kEmptyInput, "no annotations");
  struct PerExample {
    size_t count = 0;
    double same = 0;
    double similarity = 0;
    double grammaticality = 0;
  };
  // Ordered maps keep the sums independent of record order.
  std::map<std::string, std::map<std::string, PerExample>> by_dataset;
  for (const AnnotationRecord& r : records) {
    Validate(r);
    PerExample& e = by_dataset[r.dataset][r.example_id];
    ++e.count;
    e.same += r.same_equation ? 1.0 : 0.0;
    e.similarity += r.similarity;
    e.grammaticality += r.grammaticality;
  }
  std::map<std::string, AnnotationSummary> out;
  for (const auto& [dataset, examples] : by_dataset) {
    AnnotationSummary summary;
    for (const auto& [id, e] : examples) {
      const double n = static_cast<double>(e.count);
      summary.same_equation_percent += e.same / n;
      summary.mean_similarity += e.similarity / n;
      summary.mean_grammaticality += e.grammaticality / n;
      summary.annotations += e.count;
    }
    summary.examples = examples.size();
    const double n = static_cast<double>(summary.examples);
    summary.same_equation_percent = 100.0 * summary.same_equation_percent / n;
    summary.mean_similarity /= n;
    summary.mean_grammaticality /= n;
    out[dataset] = summary;
  }
  return out;
}

std::set<std::string> MajoritySameEquation(
    const std::vector<AnnotationRecord>& records) {
  std::map<std::string, std::pair<size_t, size_t>> votes;  // yes, total
  for (const AnnotationRecord& r : records) {
    auto& [yes, total] = votes[r.example_id];
    yes += r.same_equation;
    ++total;
  }
  std::set<std::string> kept;
  for (const auto& [id, tally] : votes) {
    if (2 * tally.first > tally.second) kept.insert(id);
  }
  return kept;
}

}  // namespace mwp
