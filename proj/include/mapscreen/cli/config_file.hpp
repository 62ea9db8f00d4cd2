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
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "mapscreen/pipeline/config.hpp"

namespace mapscreen::cli {

// One stage's backend, as given in the config file's "backends" object.
struct StageBackend {
  std::string kind;  // mock | cached | model
  std::string path;  // cache or bundle directory, or the mock key
};

// Settings that can come from the config file or the command line. Unset
// fields fall through to the next layer: flags, then file, then defaults.
struct Settings {
  std::optional<std::vector<std::string>> terms;
  std::optional<std::int64_t> lambda;
  std::optional<std::string> comparator;
  std::optional<std::string> granularity;
  std::optional<double> classifier_threshold;
  std::optional<std::int64_t> jobs;
  std::optional<std::string> backend;
  std::optional<std::string> cache_dir;
  std::optional<std::string> model_dir;
  std::optional<std::string> mock_key;
  std::array<std::optional<StageBackend>, 3> stages;  // classifier, detector, recognizer

  // Fields set in `over` replace the ones here.
  void merge(const Settings& over);
};

// JSON object with the keys terms, lambda, comparator, granularity,
// classifier_threshold, jobs, backend, cache_dir, model_dir, mock and
// backends{classifier,detector,recognizer}. Unknown keys are errors; relative
// directories resolve against the file's directory. Throws ConfigError.
Settings load_config_file(const std::filesystem::path& file);
Settings parse_config(const std::string& json_text, const std::filesystem::path& base_dir);

// Validates every field and builds the pipeline configuration. Throws
// ConfigError naming the field.
pipeline::PipelineConfig resolve(const Settings& settings);

// Only the matching part of `settings`.
text::MatchPolicy resolve_policy(const Settings& settings);

}  // namespace mapscreen::cli
