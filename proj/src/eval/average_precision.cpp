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

#include "mapscreen/eval/average_precision.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "mapscreen/error.hpp"

namespace mapscreen::eval {

double average_precision(std::span<const RankedPrediction> predictions) {
  std::vector<const RankedPrediction*> ranked;
  ranked.reserve(predictions.size());
  std::size_t positives = 0;
  for (const RankedPrediction& p : predictions) {
    if (!std::isfinite(p.score)) throw Error("average precision: score of '" + p.image_id + "' is not finite");
    if (p.ground_truth == dataset::Polarity::Positive) ++positives;
    ranked.push_back(&p);
  }
  if (positives == 0) throw Error("average precision needs at least one positive");

  std::sort(ranked.begin(), ranked.end(), [](const RankedPrediction* a, const RankedPrediction* b) {
    if (a->score != b->score) return a->score > b->score;
    return a->image_id < b->image_id;
  });

  double sum = 0.0;
  std::size_t hits = 0;
  for (std::size_t k = 0; k < ranked.size(); ++k) {
    if (ranked[k]->ground_truth != dataset::Polarity::Positive) continue;
    ++hits;
    sum += static_cast<double>(hits) / static_cast<double>(k + 1);
  }
  return sum / static_cast<double>(positives);
}

double composite_rank_score(const pipeline::Verdict& verdict) {
  const double s = std::clamp(verdict.classifier_score, 0.0, 1.0);
  if (!verdict.failed() && verdict.label == pipeline::Label::Positive) return 0.5 + 0.5 * s;
  return 0.5 * (1.0 - s);
}

}  // namespace mapscreen::eval
