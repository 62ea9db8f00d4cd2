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

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace mapscreen::inference {

struct ChannelNorm {
  std::array<float, 3> mean{0.485F, 0.456F, 0.406F};  // RGB, on [0, 1] pixels
  std::array<float, 3> std{0.229F, 0.224F, 0.225F};
};

struct DetectorSettings {
  // Side of the square network input; unset runs at native resolution
  // rounded to a multiple of 32.
  std::optional<int> input_size;
  ChannelNorm norm;
  double binarize_threshold = 0.3;
  double box_threshold = 0.5;
  double unclip_ratio = 1.5;
  int max_candidates = 1000;
};

struct RecognizerSettings {
  int input_height = 32;
  int input_width = 128;
  ChannelNorm norm{{0.5F, 0.5F, 0.5F}, {0.5F, 0.5F, 0.5F}};
  // CTC alphabet; index `blank_index` is the blank symbol.
  std::vector<std::string> charset;
  int blank_index = 0;
  bool time_major = false;        // output [T, N, C] instead of [N, T, C]
  bool outputs_probabilities = false;
};

// Parsed meta.json of a model bundle directory.
struct BundleMeta {
  int input_size = 380;
  ChannelNorm norm;
  std::vector<std::string> labels;  // classifier class names
  DetectorSettings detector;
  std::optional<RecognizerSettings> recognizer;

  // Index of the "Vietnam map" class: the label named vietnam_map, else 1.
  std::size_t positive_class() const;
};

// A directory holding classifier.onnx / detector.onnx / recognizer.onnx and
// meta.json. Any subset of the model files may be present; asking for a
// missing one throws.
class ModelBundle {
 public:
  static constexpr const char* kMetaFile = "meta.json";
  static constexpr const char* kClassifierFile = "classifier.onnx";
  static constexpr const char* kDetectorFile = "detector.onnx";
  static constexpr const char* kRecognizerFile = "recognizer.onnx";

  // Throws Error if the directory or meta.json is missing or invalid.
  static ModelBundle open(const std::filesystem::path& dir);
  static BundleMeta parse_meta(const std::string& json_text);

  const std::filesystem::path& dir() const noexcept { return dir_; }
  const BundleMeta& meta() const noexcept { return meta_; }

  bool has_classifier() const;
  bool has_detector() const;
  bool has_recognizer() const;

  std::filesystem::path classifier_path() const;
  std::filesystem::path detector_path() const;
  std::filesystem::path recognizer_path() const;

 private:
  std::filesystem::path dir_;
  BundleMeta meta_;
};

}  // namespace mapscreen::inference
