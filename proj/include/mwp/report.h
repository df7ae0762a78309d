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

#ifndef MWP_REPORT_H_
#define MWP_REPORT_H_

#include <string>
#include <vector>

#include "json.hpp"
#include "mwp/campaign.h"

namespace mwp {

// Fixed-width accuracy table: an "Orig" row and one row per attack method,
// one column per solver, values in percent to one decimal. Success rates and
// mean query counts follow in two smaller tables of the same shape. With no
// evaluated records only the header line is produced.
std::string RenderReport(const std::vector<CampaignReport>& reports);

// Machine-readable twin of RenderReport with unrounded figures.
nlohmann::json ReportToJson(const std::vector<CampaignReport>& reports);

}  // namespace mwp

#endif  // MWP_REPORT_H_
