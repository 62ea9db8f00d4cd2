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

#include "mapscreen/pipeline/backends.hpp"

#include <map>

#include "mapscreen/inference/cached_backend.hpp"
#include "mapscreen/inference/mock_backend.hpp"
#include "mapscreen/inference/model_backend.hpp"

namespace mapscreen::pipeline {
namespace {

using namespace mapscreen::inference;

// Loads each distinct cache or bundle directory once.
class Resources {
 public:
  std::shared_ptr<const PredictionCache> cache(const std::string& dir) {
    auto& slot = caches_[dir];
    if (!slot) slot = std::make_shared<const PredictionCache>(PredictionCache::load(dir));
    return slot;
  }

  const ModelBundle& bundle(const std::string& dir) {
    auto it = bundles_.find(dir);
    if (it == bundles_.end()) it = bundles_.emplace(dir, ModelBundle::open(dir)).first;
    return it->second;
  }

 private:
  std::map<std::string, std::shared_ptr<const PredictionCache>> caches_;
  std::map<std::string, ModelBundle> bundles_;
};

}  // namespace

Backends::Backends(std::shared_ptr<MapClassifier> classifier, std::shared_ptr<TextDetector> detector,
                   std::shared_ptr<TextRecognizer> recognizer)
    : classifier_(std::make_unique<StagePool<MapClassifier>>(std::move(classifier))),
      detector_(std::make_unique<StagePool<TextDetector>>(std::move(detector))),
      recognizer_(std::make_unique<StagePool<TextRecognizer>>(std::move(recognizer))) {}

std::unique_ptr<Backends> Backends::from_config(const PipelineConfig& config) {
  config.validate();
  Resources resources;
  const std::size_t workers = config.parallelism;
  std::unique_ptr<Backends> backends(new Backends());

  const BackendDescriptor& cls = config.classifier;
  StagePool<MapClassifier>::Factory make_classifier;
  switch (cls.kind) {
    case BackendKind::Mock: {
      const std::string key = cls.identifier.empty() ? MockClassifier::kVietnamMap : cls.identifier;
      make_classifier = [key] { return std::make_unique<MockClassifier>(key); };
      break;
    }
    case BackendKind::Cached: {
      auto cache = resources.cache(cls.identifier);
      const double threshold = config.classifier_threshold;
      make_classifier = [cache, threshold, id = cls.identifier] {
        return std::make_unique<CachedClassifier>(cache, threshold, id);
      };
      break;
    }
    case BackendKind::ModelFile: {
      const ModelBundle bundle = resources.bundle(cls.identifier);
      const double threshold = config.classifier_threshold;
      make_classifier = [bundle, threshold] {
        return std::make_unique<ModelClassifier>(bundle, threshold);
      };
      break;
    }
  }
  backends->classifier_ = std::make_unique<StagePool<MapClassifier>>(make_classifier, workers);

  const BackendDescriptor& det = config.detector;
  StagePool<TextDetector>::Factory make_detector;
  switch (det.kind) {
    case BackendKind::Mock:
      make_detector = [] { return std::make_unique<MockDetector>(); };
      break;
    case BackendKind::Cached:
      make_detector = [cache = resources.cache(det.identifier), id = det.identifier] {
        return std::make_unique<CachedDetector>(cache, id);
      };
      break;
    case BackendKind::ModelFile:
      make_detector = [bundle = resources.bundle(det.identifier)] {
        return std::make_unique<ModelDetector>(bundle);
      };
      break;
  }
  backends->detector_ = std::make_unique<StagePool<TextDetector>>(make_detector, workers);

  const BackendDescriptor& rec = config.recognizer;
  StagePool<TextRecognizer>::Factory make_recognizer;
  switch (rec.kind) {
    case BackendKind::Mock:
      make_recognizer = [] { return std::make_unique<MockRecognizer>(); };
      break;
    case BackendKind::Cached:
      make_recognizer = [cache = resources.cache(rec.identifier), id = rec.identifier] {
        return std::make_unique<CachedRecognizer>(cache, id);
      };
      break;
    case BackendKind::ModelFile:
      make_recognizer = [bundle = resources.bundle(rec.identifier)] {
        return std::make_unique<ModelRecognizer>(bundle);
      };
      break;
  }
  backends->recognizer_ = std::make_unique<StagePool<TextRecognizer>>(make_recognizer, workers);
  return backends;
}

}  // namespace mapscreen::pipeline
