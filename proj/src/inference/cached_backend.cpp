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

#include "mapscreen/inference/cached_backend.hpp"

namespace mapscreen::inference {

CachedClassifier::CachedClassifier(std::shared_ptr<const PredictionCache> cache, double threshold,
                                   std::string identifier)
    : cache_(std::move(cache)), threshold_(threshold), identifier_(std::move(identifier)) {}

BackendDescriptor CachedClassifier::descriptor() const {
  return {BackendKind::Cached, identifier_, true};
}

MapClassOutput CachedClassifier::do_classify(const ImageInput& image) {
  const MapClassOutput* stored = cache_->classification(image.id());
  if (stored == nullptr) throw BackendError("classify", "no cached prediction for '" + image.id() + "'");
  return {stored->score >= threshold_, stored->score};
}

CachedDetector::CachedDetector(std::shared_ptr<const PredictionCache> cache, std::string identifier)
    : cache_(std::move(cache)), identifier_(std::move(identifier)) {}

BackendDescriptor CachedDetector::descriptor() const {
  return {BackendKind::Cached, identifier_, true};
}

std::vector<TextRegion> CachedDetector::do_detect(const ImageInput& image) {
  const std::vector<TextRegion>* stored = cache_->detection(image.id());
  if (stored == nullptr) throw BackendError("detect", "no cached prediction for '" + image.id() + "'");
  return *stored;
}

CachedRecognizer::CachedRecognizer(std::shared_ptr<const PredictionCache> cache,
                                   std::string identifier)
    : cache_(std::move(cache)), identifier_(std::move(identifier)) {}

BackendDescriptor CachedRecognizer::descriptor() const {
  return {BackendKind::Cached, identifier_, true};
}

RecognizedInstance CachedRecognizer::do_recognize(const ImageInput& image,
                                                  const TextRegion& region) {
  const RecognizedInstance* stored = cache_->recognition(image.id(), region.polygon);
  if (stored == nullptr) return {region, {}, 0.0};
  return {region, stored->text, stored->confidence};
}

}  // namespace mapscreen::inference
