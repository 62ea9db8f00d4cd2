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

#include "mapscreen/inference/backend.hpp"

#include <algorithm>
#include <cmath>

namespace mapscreen::inference {
namespace {

bool in_unit_range(double v) { return std::isfinite(v) && v >= 0.0 && v <= 1.0; }

}  // namespace

MapClassOutput MapClassifier::classify(const ImageInput& image) {
  MapClassOutput out = do_classify(image);
  if (!in_unit_range(out.score)) {
    throw BackendError("classify", "score out of [0, 1] for '" + image.id() + "'");
  }
  return out;
}

std::vector<TextRegion> TextDetector::detect(const ImageInput& image) {
  std::vector<TextRegion> regions = do_detect(image);
  for (const TextRegion& region : regions) {
    if (!in_unit_range(region.score)) {
      throw BackendError("detect", "region score out of [0, 1] for '" + image.id() + "'");
    }
  }
  std::stable_sort(regions.begin(), regions.end(),
                   [](const TextRegion& a, const TextRegion& b) { return a.score > b.score; });
  return regions;
}

RecognizedInstance TextRecognizer::recognize(const ImageInput& image, const TextRegion& region) {
  if (is_degenerate(region.polygon)) {
    throw InvalidRegionError("region polygon of '" + image.id() + "' has zero area");
  }
  RecognizedInstance out = do_recognize(image, region);
  if (!in_unit_range(out.confidence)) {
    throw BackendError("recognize", "confidence out of [0, 1] for '" + image.id() + "'");
  }
  return out;
}

}  // namespace mapscreen::inference
