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

#include <string>
#include <string_view>
#include <optional>

#include "mapscreen/error.hpp"
#include "mapscreen/geometry.hpp"

namespace mapscreen::inference {

struct MapClassOutput {
  bool is_vietnam_map = false;
  double score = 0.0;  // confidence that the image is a Vietnam map, [0, 1]

  friend bool operator==(const MapClassOutput&, const MapClassOutput&) = default;
};

struct TextRegion {
  Quad polygon{};
  double score = 0.0;

  friend bool operator==(const TextRegion&, const TextRegion&) = default;
};

struct RecognizedInstance {
  TextRegion region;
  std::string text;  // empty when the crop was unreadable
  double confidence = 0.0;

  friend bool operator==(const RecognizedInstance&, const RecognizedInstance&) = default;
};

enum class BackendKind { Mock, Cached, ModelFile };

std::string_view to_string(BackendKind kind);
// "mock" | "cached" | "model" (also accepts "model-file").
std::optional<BackendKind> parse_backend_kind(std::string_view token);

struct BackendDescriptor {
  BackendKind kind = BackendKind::Mock;
  // Mock key, prediction cache directory or model bundle directory.
  std::string identifier;
  bool shareable = true;
};

// The image could not be read or has zero area.
class DecodeError : public Error {
 public:
  using Error::Error;
};

// A backend failed while serving `stage` ("classify", "detect", "recognize").
class BackendError : public Error {
 public:
  BackendError(std::string stage, const std::string& what)
      : Error(stage + ": " + what), stage_(std::move(stage)) {}

  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

// Region polygon has no area.
class InvalidRegionError : public Error {
 public:
  using Error::Error;
};

}  // namespace mapscreen::inference
