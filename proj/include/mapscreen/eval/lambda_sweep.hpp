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

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "mapscreen/dataset/manifest.hpp"
#include "mapscreen/eval/report.hpp"
#include "mapscreen/pipeline/verdict.hpp"
#include "mapscreen/text/match.hpp"

namespace mapscreen::eval {

struct SweepRow {
  std::size_t lambda = 0;
  std::size_t matched_instances = 0;  // evidence items matching at this lambda
  std::size_t landmark_detected = 0;  // with-islands maps decided ContainsLandmark
  std::size_t landmark_total = 0;     // with-islands maps in the setting
  EvalReport report;

  double landmark_recall() const;
};

// Re-decides every verdict from its recorded evidence at each lambda; no
// backend runs. Classifier outcomes and error verdicts are kept as they are.
// Rows follow the order of `lambdas`.
std::vector<SweepRow> lambda_sweep(std::span<const pipeline::Verdict> verdicts,
                                   std::span<const dataset::ManifestEntry> entries,
                                   std::span<const std::size_t> lambdas,
                                   const text::MatchPolicy& base,
                                   Setting setting = Setting::EngVn);

// Re-decision of a single verdict under `policy`.
pipeline::Verdict redecide(const pipeline::Verdict& verdict, const text::MatchPolicy& policy);

// Aligned text table, one column per lambda.
std::string render_sweep_table(std::span<const SweepRow> rows);
nlohmann::ordered_json sweep_to_json(std::span<const SweepRow> rows, const text::MatchPolicy& base);

}  // namespace mapscreen::eval
