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
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "mapscreen/dataset/manifest.hpp"
#include "mapscreen/inference/backend.hpp"
#include "mapscreen/pipeline/backends.hpp"
#include "mapscreen/pipeline/config.hpp"
#include "mapscreen/pipeline/verdict.hpp"

namespace mapscreen::pipeline {

struct Stages {
  inference::MapClassifier& classifier;
  inference::TextDetector& detector;
  inference::TextRecognizer& recognizer;
};

// Classify; stop there unless the image is a Vietnam map; otherwise detect,
// recognize each region, match the non-blank texts and decide. Failures are
// returned as an error verdict naming the stage, never thrown.
Verdict screen_image(const inference::ImageInput& image, Stages stages,
                     const text::MatchPolicy& policy);

struct ScreenItem {
  std::string image_id;
  std::filesystem::path path;
};

std::vector<ScreenItem> items_from_manifest(const dataset::Manifest& manifest);

struct RunSummary {
  std::size_t total = 0;
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::array<std::size_t, 4> per_reason{};  // indexed by Reason

  std::size_t count(Reason reason) const { return per_reason[static_cast<std::size_t>(reason)]; }
  void add(const Verdict& verdict);

  friend bool operator==(const RunSummary&, const RunSummary&) = default;
};

struct BatchResult {
  std::vector<Verdict> verdicts;  // same order as the input items
  RunSummary summary;
};

using ProgressFn = std::function<void(std::size_t done, std::size_t total)>;

// Screens every item on `config.parallelism` workers. Each worker leases one
// instance per stage for the whole run.
BatchResult screen_batch(std::span<const ScreenItem> items, Backends& backends,
                         const PipelineConfig& config, const ProgressFn& progress = {});

}  // namespace mapscreen::pipeline
