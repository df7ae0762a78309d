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

#ifndef MWP_ANNOTATION_H_
#define MWP_ANNOTATION_H_

#include <filesystem>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "mwp/campaign.h"

namespace mwp {

struct AnnotationRecord {
  std::string example_id;
  std::string dataset;
  std::string annotator;
  bool same_equation = false;
  double similarity = 0;   // [0, 1]
  int grammaticality = 1;  // 1..5

  friend bool operator==(const AnnotationRecord&, const AnnotationRecord&) = default;
};

// Throws std::invalid_argument when a field is out of range or an id is
// empty.
void Validate(const AnnotationRecord& record);

nlohmann::json ToJson(const AnnotationRecord& record);
AnnotationRecord AnnotationFromJson(const nlohmann::json& value);

// Missing file reads as no records. Bad lines raise FormatError.
std::vector<AnnotationRecord> ReadAnnotations(const std::filesystem::path& path);

// One successful adversarial example to be judged.
struct AnnotationItem {
  std::string example_id;
  std::string dataset;
  std::string original_text;
  std::string adversarial_text;
};

// Every successful attack in the reports, ids as in the exported set.
std::vector<AnnotationItem> AnnotationItems(
    const std::vector<CampaignReport>& reports);

// Asks the three questions for every item `annotator` has not yet judged in
// `out_path`, in order: same equation (yes/no), similarity in [0, 1],
// grammaticality in 1..5. Invalid answers are asked again. Each finished
// record is appended to `out_path` at once, so an interrupted session
// resumes where it stopped. Stops early at end of input. Returns the records
// written in this session.
std::vector<AnnotationRecord> Annotate(const std::vector<AnnotationItem>& items,
                                       const std::string& annotator,
                                       std::istream& in, std::ostream& out,
                                       const std::filesystem::path& out_path);

struct AnnotationSummary {
  size_t examples = 0;
  size_t annotations = 0;
  double same_equation_percent = 0;
  double mean_similarity = 0;
  double mean_grammaticality = 0;
};

// Per dataset: scores are first averaged over the annotators of each example,
// then over examples. Throws EmptyInput on no records.
std::map<std::string, AnnotationSummary> AggregateAnnotations(
    const std::vector<AnnotationRecord>& records);

// Example ids that a strict majority of their annotators judged to keep the
// same equation.
std::set<std::string> MajoritySameEquation(
    const std::vector<AnnotationRecord>& records);

}  // namespace mwp

#endif  // MWP_ANNOTATION_H_
