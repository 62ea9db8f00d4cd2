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

#include "mapscreen/cli/config_file.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mapscreen/error.hpp"
#include "mapscreen/inference/types.hpp"

namespace mapscreen::cli {
namespace {

using Json = nlohmann::json;

constexpr const char* kStageNames[] = {"classifier", "detector", "recognizer"};

template <typename T>
void take(std::optional<T>& into, const std::optional<T>& from) {
  if (from) into = from;
}

std::string resolve_dir(const std::string& value, const std::filesystem::path& base) {
  const std::filesystem::path p(value);
  if (p.is_absolute() || base.empty()) return p.lexically_normal().string();
  return (base / p).lexically_normal().string();
}

std::string expect_string(const Json& value, const std::string& field) {
  if (!value.is_string()) throw ConfigError(field, "expected a string");
  return value.get<std::string>();
}

std::int64_t expect_integer(const Json& value, const std::string& field) {
  if (!value.is_number_integer()) throw ConfigError(field, "expected an integer");
  return value.get<std::int64_t>();
}

std::size_t checked_size(std::int64_t value, const std::string& field, std::int64_t minimum) {
  if (value < minimum) {
    throw ConfigError(field, "must be an integer >= " + std::to_string(minimum) + ", got " +
                                 std::to_string(value));
  }
  return static_cast<std::size_t>(value);
}

inference::BackendKind parse_kind(const std::string& token, const std::string& field) {
  const auto kind = inference::parse_backend_kind(token);
  if (!kind) throw ConfigError(field, "unknown backend '" + token + "' (expected mock, cached or model)");
  return *kind;
}

}  // namespace

void Settings::merge(const Settings& over) {
  take(terms, over.terms);
  take(lambda, over.lambda);
  take(comparator, over.comparator);
  take(granularity, over.granularity);
  take(classifier_threshold, over.classifier_threshold);
  take(jobs, over.jobs);
  take(backend, over.backend);
  take(cache_dir, over.cache_dir);
  take(model_dir, over.model_dir);
  take(mock_key, over.mock_key);
  for (std::size_t i = 0; i < stages.size(); ++i) take(stages[i], over.stages[i]);
}

Settings parse_config(const std::string& json_text, const std::filesystem::path& base_dir) {
  Json root;
  try {
    root = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    throw ConfigError("config", std::string("not valid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("config", "expected a JSON object");

  Settings s;
  for (const auto& [key, value] : root.items()) {
    if (key == "terms") {
      if (!value.is_array()) throw ConfigError("terms", "expected an array of strings");
      std::vector<std::string> terms;
      for (const Json& t : value) terms.push_back(expect_string(t, "terms"));
      s.terms = std::move(terms);
    } else if (key == "lambda") {
      s.lambda = expect_integer(value, key);
    } else if (key == "comparator") {
      s.comparator = expect_string(value, key);
    } else if (key == "granularity") {
      s.granularity = expect_string(value, key);
    } else if (key == "classifier_threshold") {
      if (!value.is_number()) throw ConfigError(key, "expected a number");
      s.classifier_threshold = value.get<double>();
    } else if (key == "jobs") {
      s.jobs = expect_integer(value, key);
    } else if (key == "backend") {
      s.backend = expect_string(value, key);
    } else if (key == "cache_dir") {
      s.cache_dir = resolve_dir(expect_string(value, key), base_dir);
    } else if (key == "model_dir") {
      s.model_dir = resolve_dir(expect_string(value, key), base_dir);
    } else if (key == "mock") {
      s.mock_key = expect_string(value, key);
    } else if (key == "backends") {
      if (!value.is_object()) throw ConfigError("backends", "expected an object");
      for (const auto& [stage, spec] : value.items()) {
        std::size_t index = 0;
        while (index < 3 && stage != kStageNames[index]) ++index;
        const std::string field = "backends." + stage;
        if (index == 3) throw ConfigError(field, "unknown stage (expected classifier, detector or recognizer)");
        if (!spec.is_object()) throw ConfigError(field, "expected an object with 'kind' and 'path'");
        StageBackend backend;
        for (const auto& [k, v] : spec.items()) {
          if (k == "kind") {
            backend.kind = expect_string(v, field + ".kind");
          } else if (k == "path") {
            backend.path = expect_string(v, field + ".path");
          } else {
            throw ConfigError(field + "." + k, "unknown key");
          }
        }
        if (backend.kind.empty()) throw ConfigError(field + ".kind", "missing");
        if (parse_kind(backend.kind, field + ".kind") != inference::BackendKind::Mock) {
          backend.path = resolve_dir(backend.path, base_dir);
        }
        s.stages[index] = std::move(backend);
      }
    } else {
      throw ConfigError(key, "unknown configuration key");
    }
  }
  return s;
}

Settings load_config_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw ConfigError("config", "cannot read " + file.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), file.parent_path());
}

text::MatchPolicy resolve_policy(const Settings& s) {
  const std::size_t lambda =
      s.lambda ? checked_size(*s.lambda, "lambda", 0) : text::MatchPolicy::kDefaultLambda;
  text::Comparator comparator = text::Comparator::StrictLess;
  if (s.comparator) {
    const auto parsed = text::parse_comparator(*s.comparator);
    if (!parsed) throw ConfigError("comparator", "expected 'strict' or 'inclusive', got '" + *s.comparator + "'");
    comparator = *parsed;
  }
  text::Granularity granularity = text::Granularity::WholeInstance;
  if (s.granularity) {
    const auto parsed = text::parse_granularity(*s.granularity);
    if (!parsed) throw ConfigError("granularity", "expected 'instance' or 'token', got '" + *s.granularity + "'");
    granularity = *parsed;
  }
  const std::vector<std::string> terms = s.terms ? *s.terms : text::MatchPolicy::default_terms();
  return text::MatchPolicy(terms, lambda, comparator, granularity);
}

pipeline::PipelineConfig resolve(const Settings& s) {
  pipeline::PipelineConfig config;
  config.policy = resolve_policy(s);
  if (s.classifier_threshold) config.classifier_threshold = *s.classifier_threshold;
  if (s.jobs) config.parallelism = checked_size(*s.jobs, "jobs", 1);

  const inference::BackendKind kind =
      s.backend ? parse_kind(*s.backend, "backend") : inference::BackendKind::Mock;
  auto identifier = [&](inference::BackendKind k, bool classifier) -> std::string {
    switch (k) {
      case inference::BackendKind::Mock:
        return classifier ? s.mock_key.value_or("vn-map") : std::string();
      case inference::BackendKind::Cached:
        if (!s.cache_dir) throw ConfigError("cache_dir", "required by the cached backend");
        return *s.cache_dir;
      case inference::BackendKind::ModelFile:
        if (!s.model_dir) throw ConfigError("model_dir", "required by the model backend");
        return *s.model_dir;
    }
    return {};
  };

  inference::BackendDescriptor* descriptors[] = {&config.classifier, &config.detector, &config.recognizer};
  for (std::size_t i = 0; i < 3; ++i) {
    inference::BackendDescriptor& d = *descriptors[i];
    if (s.stages[i]) {
      d.kind = parse_kind(s.stages[i]->kind, std::string("backends.") + kStageNames[i] + ".kind");
      d.identifier = s.stages[i]->path;
      if (d.kind == inference::BackendKind::Mock && i == 0 && d.identifier.empty()) d.identifier = "vn-map";
    } else {
      d.kind = kind;
      d.identifier = identifier(kind, i == 0);
    }
    d.shareable = d.kind != inference::BackendKind::ModelFile;
  }
  config.validate();
  return config;
}

}  // namespace mapscreen::cli
