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

#include "mwp/report.h"

#include <algorithm>
#include <cstdio>

namespace mwp {
namespace {

constexpr size_t kLabelWidth = 6;

std::string Fixed(double value, int decimals) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
  return buf;
}

std::string PadLeft(const std::string& text, size_t width) {
  return text.size() >= width ? text : std::string(width - text.size(), ' ') + text;
}

std::string PadRight(const std::string& text, size_t width) {
  return text.size() >= width ? text : text + std::string(width - text.size(), ' ');
}

struct Table {
  std::string title;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string Render(const Table& table, const std::vector<size_t>& widths) {
  std::string out;
  if (!table.title.empty()) out += table.title + "\n";
  auto emit = [&](const std::vector<std::string>& cells) {
    std::string line = PadRight(cells[0], kLabelWidth);
    for (size_t c = 1; c < cells.size(); ++c) {
      line += "  " + PadLeft(cells[c], widths[c - 1]);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  };
  emit(table.header);
  for (const auto& row : table.rows) emit(row);
  return out;
}

// Methods present in any report, in their configured order.
std::vector<AttackMethod> Methods(const std::vector<CampaignReport>& reports) {
  std::vector<AttackMethod> methods;
  for (const CampaignReport& report : reports) {
    for (const MethodSummary& summary : report.methods) {
      if (std::find(methods.begin(), methods.end(), summary.method) ==
          methods.end()) {
        methods.push_back(summary.method);
      }
    }
  }
  return methods;
}

const MethodSummary* Find(const CampaignReport& report, AttackMethod method) {
  for (const MethodSummary& summary : report.methods) {
    if (summary.method == method) return &summary;
  }
  return nullptr;
}

}  // namespace

std::string RenderReport(const std::vector<CampaignReport>& reports) {
  std::vector<std::string> header = {"Eval"};
  std::vector<size_t> widths;
  bool any = false;
  for (const CampaignReport& report : reports) {
    header.push_back(report.solver);
    widths.push_back(std::max<size_t>(report.solver.size(), 6));
    any = any || report.evaluated > 0;
  }
  Table accuracy{"", header, {}};
  if (!any) return Render(accuracy, widths);

  Table success{"Attack success rate (%)", header, {}};
  Table queries{"Mean queries per problem", header, {}};
  std::vector<std::string> orig = {"Orig"};
  for (const CampaignReport& report : reports) {
    orig.push_back(Fixed(report.original_accuracy, 1));
  }
  accuracy.rows.push_back(orig);
  for (AttackMethod method : Methods(reports)) {
    const std::string label(AttackMethodName(method));
    std::vector<std::string> acc = {label}, rate = {label}, mean = {label};
    for (const CampaignReport& report : reports) {
      const MethodSummary* summary = Find(report, method);
      acc.push_back(summary ? Fixed(summary->adversarial_accuracy, 1) : "-");
      rate.push_back(summary ? Fixed(summary->success_rate, 1) : "-");
      mean.push_back(summary ? Fixed(summary->mean_queries, 2) : "-");
    }
    accuracy.rows.push_back(acc);
    success.rows.push_back(rate);
    queries.rows.push_back(mean);
  }
  std::string out = Render(accuracy, widths);
  out += "\n" + Render(success, widths);
  out += "\n" + Render(queries, widths);
  return out;
}

nlohmann::json ReportToJson(const std::vector<CampaignReport>& reports) {
  nlohmann::json solvers = nlohmann::json::array();
  for (const CampaignReport& report : reports) {
    nlohmann::json methods = nlohmann::json::array();
    for (const MethodSummary& s : report.methods) {
      methods.push_back({{"method", AttackMethodName(s.method)},
                         {"evaluated", s.evaluated},
                         {"originally_correct", s.originally_correct},
                         {"adversarially_correct", s.adversarially_correct},
                         {"successes", s.successes},
                         {"original_accuracy", s.original_accuracy},
                         {"adversarial_accuracy", s.adversarial_accuracy},
                         {"success_rate", s.success_rate},
                         {"mean_queries", s.mean_queries}});
    }
    solvers.push_back({{"solver", report.solver},
                       {"records", report.outcomes.size()},
                       {"evaluated", report.evaluated},
                       {"errored", report.errored},
                       {"original_accuracy", report.original_accuracy},
                       {"methods", methods}});
  }
  return {{"solvers", solvers}};
}

}  // namespace mwp
