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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mapscreen/inference/types.hpp"
#include "mapscreen/text/match.hpp"

namespace mapscreen::pipeline {

enum class Label { Positive, Negative };

// `Error` marks an image whose screening failed; it is reported separately
// and always carries the Negative label.
enum class Reason { NotVietnamMap, ContainsLandmark, ExcludesLandmarks, Error };

inline constexpr Reason kReasons[] = {Reason::NotVietnamMap, Reason::ContainsLandmark,
                                      Reason::ExcludesLandmarks, Reason::Error};

std::string_view to_string(Label label);
std::string_view to_string(Reason reason);
std::optional<Label> parse_label(std::string_view token);
std::optional<Reason> parse_reason(std::string_view token);

// One recognized text instance and how it fared against the vocabulary.
struct Evidence {
  inference::RecognizedInstance instance;
  text::MatchResult match;
};

struct StageFailure {
  std::string stage;  // decode | classify | detect | recognize
  std::string message;
};

struct Verdict {
  std::string image_id;
  Label label = Label::Negative;
  Reason reason = Reason::NotVietnamMap;
  std::vector<Evidence> evidence;
  double classifier_score = 0.0;
  std::optional<StageFailure> error;

  bool failed() const noexcept { return error.has_value(); }
};

struct Decision {
  Label label;
  Reason reason;

  friend bool operator==(const Decision&, const Decision&) = default;
};

// Not a Vietnam map -> Negative/NotVietnamMap; Vietnam map with a landmark
// match -> Negative/ContainsLandmark; Vietnam map without -> Positive.
Decision decide(bool is_vietnam_map, bool any_matched);
inline Decision decide(bool is_vietnam_map, const text::MatchSummary& outcome) {
  return decide(is_vietnam_map, outcome.any_matched);
}

}  // namespace mapscreen::pipeline
