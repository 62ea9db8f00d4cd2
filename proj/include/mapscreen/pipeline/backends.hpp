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
#include "mapscreen/inference/stage_pool.hpp"
#include "mapscreen/pipeline/config.hpp"

namespace mapscreen::pipeline {

// One pool per model stage.
class Backends {
 public:
  Backends(std::shared_ptr<inference::MapClassifier> classifier,
           std::shared_ptr<inference::TextDetector> detector,
           std::shared_ptr<inference::TextRecognizer> recognizer);

  // Instantiates the backends named by the config's descriptors. Non-shareable
  // backends get one instance per worker. Throws ConfigError or
  // inference::BackendError when a backend cannot be created.
  static std::unique_ptr<Backends> from_config(const PipelineConfig& config);

  inference::StagePool<inference::MapClassifier>& classifier() { return *classifier_; }
  inference::StagePool<inference::TextDetector>& detector() { return *detector_; }
  inference::StagePool<inference::TextRecognizer>& recognizer() { return *recognizer_; }

 private:
  Backends() = default;

  std::unique_ptr<inference::StagePool<inference::MapClassifier>> classifier_;
  std::unique_ptr<inference::StagePool<inference::TextDetector>> detector_;
  std::unique_ptr<inference::StagePool<inference::TextRecognizer>> recognizer_;
};

}  // namespace mapscreen::pipeline
