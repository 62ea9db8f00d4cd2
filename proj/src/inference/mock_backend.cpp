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

#include "mapscreen/inference/mock_backend.hpp"

namespace mapscreen::inference {
namespace {

MapClassOutput mock_output(const std::string& key) {
  if (key == MockClassifier::kVietnamMap) return {true, 1.0};
  if (key == MockClassifier::kNotMap) return {false, 0.0};
  throw ConfigError("mock", "unknown mock classifier key '" + key + "' (expected vn-map or not-map)");
}

}  // namespace

MockClassifier::MockClassifier(std::string key, std::map<std::string, std::string> per_image)
    : key_(std::move(key)), per_image_(std::move(per_image)) {
  mock_output(key_);
  for (const auto& [id, k] : per_image_) mock_output(k);
}

BackendDescriptor MockClassifier::descriptor() const {
  return {BackendKind::Mock, key_, true};
}

MapClassOutput MockClassifier::do_classify(const ImageInput& image) {
  ++calls_;
  const auto it = per_image_.find(image.id());
  return mock_output(it == per_image_.end() ? key_ : it->second);
}

MockDetector::MockDetector(std::vector<TextRegion> regions) : regions_(std::move(regions)) {}

std::vector<TextRegion> MockDetector::stacked_regions(std::size_t count) {
  std::vector<TextRegion> regions;
  for (std::size_t i = 0; i < count; ++i) {
    const double top = 10.0 + 40.0 * static_cast<double>(i);
    regions.push_back({Quad{{{10, top}, {110, top}, {110, top + 30}, {10, top + 30}}}, 1.0});
  }
  return regions;
}

BackendDescriptor MockDetector::descriptor() const { return {BackendKind::Mock, "regions", true}; }

std::vector<TextRegion> MockDetector::do_detect(const ImageInput&) {
  ++calls_;
  return regions_;
}

MockRecognizer::MockRecognizer(std::vector<Label> labels) : labels_(std::move(labels)) {}

BackendDescriptor MockRecognizer::descriptor() const { return {BackendKind::Mock, "labels", true}; }

RecognizedInstance MockRecognizer::do_recognize(const ImageInput&, const TextRegion& region) {
  ++calls_;
  for (const Label& label : labels_) {
    if (label.polygon == region.polygon) return {region, label.text, 1.0};
  }
  return {region, {}, 0.0};
}

}  // namespace mapscreen::inference
