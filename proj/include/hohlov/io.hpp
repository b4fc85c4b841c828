// Copyright (c) 2026 the hohlov authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0.txt
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

#include <json.hpp>

#include "hohlov/bounds.hpp"
#include "hohlov/classes.hpp"
#include "hohlov/extremal.hpp"
#include "hohlov/series.hpp"

namespace hohlov {

using json = nlohmann::ordered_json;

// Coefficient files: {"order": N, "coeffs": [[re, im], ...]} with exactly
// N+1 finite pairs, index 0 first.
json series_to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const json& j);
TruncatedSeries load_series(const std::string& path);

// Measure files: {"atoms": [{"t": radians, "w": weight}, ...]}.
json measure_to_json(const PmMeasure& measure);
PmMeasure measure_from_json(const json& j);
PmMeasure load_measure(const std::string& path);

// Reports. Non-finite branch values serialize as the string "inf".
json bound_report_to_json(const BoundReport& report);
json search_report_to_json(const SearchReport& report);
json membership_report_to_json(const MembershipReport& report);

/// Shortest round-trip decimal form of a double ("inf"/"-inf"/"nan" when
/// not finite); used for CSV output.
std::string format_double(double value);

}  // namespace hohlov
