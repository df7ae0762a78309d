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

#ifndef MWP_DATASET_H_
#define MWP_DATASET_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mwp/equation.h"
#include "mwp/problem.h"
#include "mwp/rational.h"

namespace mwp {

enum class DatasetSource { kMaWPS, kASDivA, kCustom };

std::string_view DatasetSourceName(DatasetSource source);  // "MaWPS", ...
std::optional<DatasetSource> ParseDatasetSource(std::string_view name);

enum class DatasetFormat { kMaWPS, kASDivA, kGenericJsonl };

// Accepts "mawps", "asdiv-a" (or "asdiv") and "generic-jsonl" (or "jsonl"),
// case-insensitively.
std::optional<DatasetFormat> ParseDatasetFormat(std::string_view name);

struct DatasetRecord {
  std::string id;
  std::string text;
  // Always of the form "X = <expression>".
  std::string equation;
  Rational answer;
  DatasetSource source = DatasetSource::kCustom;

  friend bool operator==(const DatasetRecord&, const DatasetRecord&) = default;
};

struct QuarantinedRecord {
  std::string id;
  // "line 4" for line-delimited files, "record 4" otherwise.
  std::string location;
  std::string reason;
};

struct LoadedDataset {
  std::vector<DatasetRecord> records;
  std::vector<QuarantinedRecord> quarantined;
};

// Equation literals that may legitimately be absent from the problem text
// (unit conversions, halves, percentages).
const std::vector<Rational>& ImplicitConstants();

// Rewrites "X = e", "e = X" and bare "e" to "X = e". Throws ParseError when
// the text has more than one '=' or no side is the unknown.
std::string NormalizeEquationText(std::string_view text);

// Checks one candidate record and returns the reasons it must be
// quarantined; empty means the record is consistent.
std::vector<std::string> CheckRecord(const DatasetRecord& record,
                                     double tolerance = kDefaultAnswerTolerance);

// Loads and checks a dataset. Structural problems (unreadable file, invalid
// JSON or XML, missing required fields, empty file) raise FormatError with
// the offending line or record; semantically inconsistent records are
// quarantined instead.
LoadedDataset LoadDataset(const std::filesystem::path& path,
                          DatasetFormat format,
                          double tolerance = kDefaultAnswerTolerance);

// Same, reading from memory. `origin` names the input in diagnostics.
LoadedDataset ParseDataset(std::string_view content, DatasetFormat format,
                           double tolerance = kDefaultAnswerTolerance,
                           std::string_view origin = "<input>");

// One tab-separated line per quarantined record: id, location, reason.
void WriteQuarantineReport(const std::filesystem::path& path,
                           const std::vector<QuarantinedRecord>& quarantined);

MathWordProblem ToProblem(const DatasetRecord& record);

}  // namespace mwp

#endif  // MWP_DATASET_H_
