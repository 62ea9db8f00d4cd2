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

#include <atomic>
#include <map>
#include <string>
#include <vector>

#include "mapscreen/inference/backend.hpp"

namespace mapscreen::inference {

// Fixed answers, with call counters so tests can observe which stages ran.

class MockClassifier final : public MapClassifier {
 public:
  static constexpr const char* kVietnamMap = "vn-map";
  static constexpr const char* kNotMap = "not-map";

  // `key` is "vn-map" -> (true, 1.0) or "not-map" -> (false, 0.0).
  // `per_image` overrides the key for specific image ids.
  explicit MockClassifier(std::string key = kVietnamMap,
                          std::map<std::string, std::string> per_image = {});

  BackendDescriptor descriptor() const override;
  std::size_t calls() const noexcept { return calls_.load(); }

 protected:
  MapClassOutput do_classify(const ImageInput& image) override;

 private:
  std::string key_;
  std::map<std::string, std::string> per_image_;
  std::atomic<std::size_t> calls_{0};
};

class MockDetector final : public TextDetector {
 public:
  explicit MockDetector(std::vector<TextRegion> regions = {});
  // Same number of unit-score regions stacked vertically.
  static std::vector<TextRegion> stacked_regions(std::size_t count);

  BackendDescriptor descriptor() const override;
  std::size_t calls() const noexcept { return calls_.load(); }

 protected:
  std::vector<TextRegion> do_detect(const ImageInput& image) override;

 private:
  std::vector<TextRegion> regions_;
  std::atomic<std::size_t> calls_{0};
};

class MockRecognizer final : public TextRecognizer {
 public:
  struct Label {
    Quad polygon;
    std::string text;
  };

  // Text looked up by exact polygon; unknown regions read as empty.
  explicit MockRecognizer(std::vector<Label> labels = {});

  BackendDescriptor descriptor() const override;
  std::size_t calls() const noexcept { return calls_.load(); }

 protected:
  RecognizedInstance do_recognize(const ImageInput& image, const TextRegion& region) override;

 private:
  std::vector<Label> labels_;
  std::atomic<std::size_t> calls_{0};
};

}  // namespace mapscreen::inference
