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

#include <memory>

#include "mapscreen/inference/backend.hpp"
#include "mapscreen/inference/prediction_cache.hpp"

namespace mapscreen::inference {

// Backends that replay stored predictions. They never decode pixels.

class CachedClassifier final : public MapClassifier {
 public:
  // The stored score is re-thresholded: is_vietnam_map = score >= threshold.
  CachedClassifier(std::shared_ptr<const PredictionCache> cache, double threshold,
                   std::string identifier = {});

  BackendDescriptor descriptor() const override;

 protected:
  MapClassOutput do_classify(const ImageInput& image) override;

 private:
  std::shared_ptr<const PredictionCache> cache_;
  double threshold_;
  std::string identifier_;
};

class CachedDetector final : public TextDetector {
 public:
  explicit CachedDetector(std::shared_ptr<const PredictionCache> cache, std::string identifier = {});

  BackendDescriptor descriptor() const override;

 protected:
  std::vector<TextRegion> do_detect(const ImageInput& image) override;

 private:
  std::shared_ptr<const PredictionCache> cache_;
  std::string identifier_;
};

class CachedRecognizer final : public TextRecognizer {
 public:
  explicit CachedRecognizer(std::shared_ptr<const PredictionCache> cache,
                            std::string identifier = {});

  BackendDescriptor descriptor() const override;

 protected:
  // Unknown regions come back as a failed read: empty text, confidence 0.
  RecognizedInstance do_recognize(const ImageInput& image, const TextRegion& region) override;

 private:
  std::shared_ptr<const PredictionCache> cache_;
  std::string identifier_;
};

}  // namespace mapscreen::inference
