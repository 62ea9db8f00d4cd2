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

#include <cstddef>

#include "mapscreen/inference/types.hpp"
#include "mapscreen/text/match.hpp"

namespace mapscreen::pipeline {

struct PipelineConfig {
  static constexpr double kDefaultClassifierThreshold = 0.5;

  text::MatchPolicy policy = text::MatchPolicy::defaults();
  double classifier_threshold = kDefaultClassifierThreshold;
  inference::BackendDescriptor classifier{inference::BackendKind::Mock, "vn-map", true};
  inference::BackendDescriptor detector{inference::BackendKind::Mock, "", true};
  inference::BackendDescriptor recognizer{inference::BackendKind::Mock, "", true};
  std::size_t parallelism = 1;

  // Throws ConfigError naming the offending field.
  void validate() const;
};

}  // namespace mapscreen::pipeline
