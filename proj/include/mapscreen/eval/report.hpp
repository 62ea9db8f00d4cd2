// Copyright (c) 2026 The mapscreen Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <span>
#include <string_view>

#include <json.hpp>

#include "mapscreen/dataset/manifest.hpp"
#include "mapscreen/eval/metrics.hpp"
#include "mapscreen/pipeline/verdict.hpp"

namespace mapscreen::eval {

// Test settings by manifest language: ENG keeps en and mixed entries, VN keeps
// vi and mixed entries, ENG-VN keeps everything.
enum class Setting { Eng, Vn, EngVn };

inline constexpr Setting kSettings[] = {Setting::Eng, Setting::Vn, Setting::EngVn};

std::string_view to_string(Setting setting);
std::optional<Setting> parse_setting(std::string_view token);  // eng | vn | eng-vn
bool in_setting(dataset::Language language, Setting setting);

struct EvalReport {
  Setting setting = Setting::EngVn;
  ConfusionCounts counts;
  Ratio precision;
  Ratio recall;
  double f1 = 0.0;
  std::optional<double> ap;              // end-to-end ranking, composite score
  std::optional<double> ap_vietnam_map;  // classifier score vs. "is a Vietnam map"
};

EvalReport make_report(Setting setting, const ConfusionCounts& counts);

// Joins verdicts with the manifest by image id, keeps the entries of
// `setting` (and of `split`, when given) and scores them. Throws
// IdMismatchError when the verdict and manifest id sets differ.
EvalReport evaluate(std::span<const pipeline::Verdict> verdicts,
                    std::span<const dataset::ManifestEntry> entries, Setting setting,
                    std::optional<dataset::Split> split = std::nullopt);

nlohmann::ordered_json to_json(const EvalReport& report);

}  // namespace mapscreen::eval
