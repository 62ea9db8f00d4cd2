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

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mapscreen/inference/types.hpp"

namespace mapscreen::inference {

// Stage outputs keyed by image id, persisted as one JSON-lines file per stage:
//
//   classify.jsonl   {"image_id", "is_vietnam_map", "score"}
//   detect.jsonl     {"image_id", "regions": [{"polygon": [8 numbers], "score"}]}
//   recognize.jsonl  {"image_id", "region": {...}, "text", "confidence"}
//
// Records are written in insertion order.
class PredictionCache {
 public:
  static constexpr const char* kClassifyFile = "classify.jsonl";
  static constexpr const char* kDetectFile = "detect.jsonl";
  static constexpr const char* kRecognizeFile = "recognize.jsonl";

  void add_classification(const std::string& image_id, const MapClassOutput& output);
  void add_detection(const std::string& image_id, std::vector<TextRegion> regions);
  void add_recognition(const std::string& image_id, RecognizedInstance instance);

  const MapClassOutput* classification(const std::string& image_id) const;
  const std::vector<TextRegion>* detection(const std::string& image_id) const;
  // Exact polygon match among the recognitions stored for `image_id`.
  const RecognizedInstance* recognition(const std::string& image_id, const Quad& polygon) const;

  const std::vector<std::string>& classified_ids() const noexcept { return classify_order_; }
  const std::vector<std::string>& detected_ids() const noexcept { return detect_order_; }
  std::size_t recognition_count() const noexcept { return recognize_order_.size(); }

  // Missing stage files load as empty. Throws Error on malformed lines.
  static PredictionCache load(const std::filesystem::path& dir);
  void save(const std::filesystem::path& dir) const;

  static PredictionCache read(std::istream* classify, std::istream* detect,
                              std::istream* recognize);
  void write(std::ostream& classify, std::ostream& detect, std::ostream& recognize) const;

 private:
  std::map<std::string, MapClassOutput> classify_;
  std::vector<std::string> classify_order_;
  std::map<std::string, std::vector<TextRegion>> detect_;
  std::vector<std::string> detect_order_;
  std::map<std::string, std::vector<RecognizedInstance>> recognize_;
  std::vector<std::pair<std::string, std::size_t>> recognize_order_;
};

}  // namespace mapscreen::inference
