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
#include <string>

#include "mapscreen/inference/backend.hpp"
#include "mapscreen/inference/model_bundle.hpp"

namespace mapscreen::inference {

// OpenCV DNN runtime over the bundle's ONNX graphs. A network instance is not
// safe to run from two threads, so these report shareable = false and the
// pipeline gives each worker its own copy.

class ModelClassifier final : public MapClassifier {
 public:
  // Throws BackendError("classify", ...) when the model cannot be loaded.
  ModelClassifier(const ModelBundle& bundle, double threshold);
  ~ModelClassifier() override;

  BackendDescriptor descriptor() const override;

  // Square resize, RGB, per-channel normalization, NCHW.
  static cv::Mat preprocess(const cv::Mat& bgr, int size, const ChannelNorm& norm);
  // Softmax over two logits, returns the probability of `positive_class`.
  static double two_class_score(const cv::Mat& logits, std::size_t positive_class);

 protected:
  MapClassOutput do_classify(const ImageInput& image) override;

 private:
  struct Net;
  std::unique_ptr<Net> net_;
  std::string identifier_;
  BundleMeta meta_;
  double threshold_;
};

class ModelDetector final : public TextDetector {
 public:
  explicit ModelDetector(const ModelBundle& bundle);
  ~ModelDetector() override;

  BackendDescriptor descriptor() const override;

 protected:
  std::vector<TextRegion> do_detect(const ImageInput& image) override;

 private:
  struct Net;
  std::unique_ptr<Net> net_;
  std::string identifier_;
  DetectorSettings settings_;
};

class ModelRecognizer final : public TextRecognizer {
 public:
  explicit ModelRecognizer(const ModelBundle& bundle);
  ~ModelRecognizer() override;

  BackendDescriptor descriptor() const override;

  // Greedy CTC: argmax per step, merge repeats, drop blanks. `scores` is
  // [T, C]; confidence is the mean of the kept steps' max probabilities.
  static std::pair<std::string, double> ctc_greedy(const cv::Mat& scores,
                                                   const RecognizerSettings& settings);

 protected:
  RecognizedInstance do_recognize(const ImageInput& image, const TextRegion& region) override;

 private:
  struct Net;
  std::unique_ptr<Net> net_;
  std::string identifier_;
  RecognizerSettings settings_;
};

}  // namespace mapscreen::inference
