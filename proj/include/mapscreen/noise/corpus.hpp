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
#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "mapscreen/dataset/manifest.hpp"
#include "mapscreen/geometry.hpp"
#include "mapscreen/inference/prediction_cache.hpp"
#include "mapscreen/noise/perturb.hpp"

namespace mapscreen::noise {

// Category weights, indexed like dataset::kCategories.
using CategoryMix = std::array<double, 4>;

// Proportions of the reference dataset: 2000 / 2777 / 1002 / 1079 images.
CategoryMix reference_mix();

// "a,b,c,d" in category order; must be non-negative and sum to 1 (1e-6).
// Throws ConfigError("mix").
CategoryMix parse_mix(std::string_view csv);

// Largest-remainder apportionment of `total` by `weights`; ties go to the
// lower index. The result always sums to `total`.
std::vector<std::size_t> apportion(std::size_t total, const std::vector<double>& weights);

// Every OCR string written to the cache, with its noise bookkeeping.
struct TextRecord {
  std::string image_id;
  Quad polygon{};
  std::string term;  // canonical landmark name, empty for distractors
  Perturbation perturbation;

  bool is_landmark() const noexcept { return !term.empty(); }
};

struct SyntheticCorpus {
  std::vector<dataset::ManifestEntry> entries;
  inference::PredictionCache cache;
  std::vector<TextRecord> texts;

  // Writes manifest.jsonl, predictions/{classify,detect,recognize}.jsonl and
  // perturbations.jsonl under `dir`, creating it if needed.
  void save(const std::filesystem::path& dir) const;
};

// Place names used as non-landmark map text. A name qualifies for noise level
// k when its folded distance to every landmark term is at least
// max(4, 2k + 2), so k edits leave it at least k + 2 away.
std::vector<std::string> distractor_names(dataset::Language language, std::size_t edits);

// Deterministic for a fixed (size, mix, spec). Throws ConfigError("size") for
// size 0, ConfigError("mix") for invalid weights, ConfigError("edits") when no
// distractor survives the noise level.
SyntheticCorpus generate_corpus(std::size_t size, const CategoryMix& mix, const NoiseSpec& spec);

}  // namespace mapscreen::noise
