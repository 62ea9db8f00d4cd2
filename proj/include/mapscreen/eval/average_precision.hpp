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

#include <span>
#include <string>

#include "mapscreen/dataset/manifest.hpp"
#include "mapscreen/pipeline/verdict.hpp"

namespace mapscreen::eval {

struct RankedPrediction {
  std::string image_id;
  double score = 0.0;
  dataset::Polarity ground_truth = dataset::Polarity::Negative;
};

// Non-interpolated AP: rank by descending score (ties by image id), then
// average precision@k over the ranks k holding a positive. Throws Error when
// there is no positive or a score is not finite.
double average_precision(std::span<const RankedPrediction> predictions);

// Ranking score for the end-to-end task: Positive verdicts map into
// (0.5, 1] by classifier score, everything else into [0, 0.5] by
// (1 - classifier score), so every Positive ranks above every Negative.
double composite_rank_score(const pipeline::Verdict& verdict);

}  // namespace mapscreen::eval
