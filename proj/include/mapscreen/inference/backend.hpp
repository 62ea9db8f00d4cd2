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

#include <vector>

#include "mapscreen/inference/image.hpp"
#include "mapscreen/inference/types.hpp"

namespace mapscreen::inference {

// The three model stages. Public entry points check the shared contract and
// delegate to the backend-specific hook, so every backend kind behaves the
// same from the caller's side.

class MapClassifier {
 public:
  virtual ~MapClassifier() = default;

  MapClassOutput classify(const ImageInput& image);
  virtual BackendDescriptor descriptor() const = 0;

 protected:
  virtual MapClassOutput do_classify(const ImageInput& image) = 0;
};

class TextDetector {
 public:
  virtual ~TextDetector() = default;

  // Regions sorted by descending score (stable for equal scores).
  std::vector<TextRegion> detect(const ImageInput& image);
  virtual BackendDescriptor descriptor() const = 0;

 protected:
  virtual std::vector<TextRegion> do_detect(const ImageInput& image) = 0;
};

class TextRecognizer {
 public:
  virtual ~TextRecognizer() = default;

  // Throws InvalidRegionError for a zero-area polygon.
  RecognizedInstance recognize(const ImageInput& image, const TextRegion& region);
  virtual BackendDescriptor descriptor() const = 0;

 protected:
  virtual RecognizedInstance do_recognize(const ImageInput& image, const TextRegion& region) = 0;
};

}  // namespace mapscreen::inference
