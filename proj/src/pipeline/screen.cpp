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

#include "mapscreen/pipeline/screen.hpp"

#include <memory>
#include <mutex>

#include "mapscreen/pipeline/worker_pool.hpp"

namespace mapscreen::pipeline {
namespace {

Verdict failure(Verdict verdict, std::string stage, std::string message) {
  verdict.label = Label::Negative;
  verdict.reason = Reason::Error;
  verdict.evidence.clear();
  verdict.error = StageFailure{std::move(stage), std::move(message)};
  return verdict;
}

}  // namespace

Verdict screen_image(const inference::ImageInput& image, Stages stages,
                     const text::MatchPolicy& policy) {
  Verdict verdict;
  verdict.image_id = image.id();
  const char* stage = "classify";
  try {
    const inference::MapClassOutput map = stages.classifier.classify(image);
    verdict.classifier_score = map.score;
    if (!map.is_vietnam_map) {
      const Decision d = decide(false, false);
      verdict.label = d.label;
      verdict.reason = d.reason;
      return verdict;
    }

    stage = "detect";
    const std::vector<inference::TextRegion> regions = stages.detector.detect(image);

    stage = "recognize";
    bool any_matched = false;
    for (const inference::TextRegion& region : regions) {
      inference::RecognizedInstance instance = stages.recognizer.recognize(image, region);
      text::MatchResult match = text::match_instance(instance.text, policy);
      if (match.input_normalized.empty()) continue;
      any_matched = any_matched || match.matched();
      verdict.evidence.push_back({std::move(instance), std::move(match)});
    }

    const Decision d = decide(true, any_matched);
    verdict.label = d.label;
    verdict.reason = d.reason;
    return verdict;
  } catch (const inference::DecodeError& e) {
    return failure(std::move(verdict), "decode", e.what());
  } catch (const inference::BackendError& e) {
    return failure(std::move(verdict), e.stage(), e.what());
  } catch (const std::exception& e) {
    return failure(std::move(verdict), stage, e.what());
  }
}

std::vector<ScreenItem> items_from_manifest(const dataset::Manifest& manifest) {
  std::vector<ScreenItem> items;
  items.reserve(manifest.entries.size());
  for (const dataset::ManifestEntry& entry : manifest.entries) {
    items.push_back({entry.image_id, manifest.resolve(entry)});
  }
  return items;
}

void RunSummary::add(const Verdict& verdict) {
  ++total;
  ++(verdict.label == Label::Positive ? positive : negative);
  ++per_reason[static_cast<std::size_t>(verdict.reason)];
}

BatchResult screen_batch(std::span<const ScreenItem> items, Backends& backends,
                         const PipelineConfig& config, const ProgressFn& progress) {
  config.validate();
  BatchResult result;
  result.verdicts.resize(items.size());

  std::mutex progress_mutex;
  std::size_t done = 0;

  struct WorkerStages {
    inference::StagePool<inference::MapClassifier>::Lease classifier;
    inference::StagePool<inference::TextDetector>::Lease detector;
    inference::StagePool<inference::TextRecognizer>::Lease recognizer;
  };

  parallel_for(items.size(), config.parallelism, [&](std::size_t) {
    auto leases = std::make_shared<WorkerStages>(WorkerStages{
        backends.classifier().acquire(), backends.detector().acquire(),
        backends.recognizer().acquire()});
    return [&, leases](std::size_t index) {
      const ScreenItem& item = items[index];
      const inference::ImageInput image(item.image_id, item.path);
      result.verdicts[index] = screen_image(
          image, Stages{*leases->classifier, *leases->detector, *leases->recognizer},
          config.policy);
      if (progress) {
        std::lock_guard lock(progress_mutex);
        progress(++done, items.size());
      }
    };
  });

  for (const Verdict& verdict : result.verdicts) result.summary.add(verdict);
  return result;
}

}  // namespace mapscreen::pipeline
