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

#include "mapscreen/pipeline/config.hpp"

#include <cmath>

#include "mapscreen/error.hpp"

namespace mapscreen::pipeline {

void PipelineConfig::validate() const {
  if (!std::isfinite(classifier_threshold) || classifier_threshold <= 0.0 ||
      classifier_threshold >= 1.0) {
    throw ConfigError("classifier_threshold", "must lie strictly between 0 and 1");
  }
  if (parallelism < 1) throw ConfigError("jobs", "must be at least 1");
  const std::pair<const char*, const inference::BackendDescriptor*> stages[] = {
      {"classifier", &classifier}, {"detector", &detector}, {"recognizer", &recognizer}};
  for (const auto& [name, descriptor] : stages) {
    if (descriptor->kind != inference::BackendKind::Mock && descriptor->identifier.empty()) {
      throw ConfigError(std::string("backend.") + name,
                        descriptor->kind == inference::BackendKind::Cached
                            ? "cached backend needs a cache directory"
                            : "model backend needs a model bundle directory");
    }
  }
}

}  // namespace mapscreen::pipeline
