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

#include "mapscreen/pipeline/verdict.hpp"

namespace mapscreen::pipeline {

std::string_view to_string(Label label) { return label == Label::Positive ? "Positive" : "Negative"; }

std::string_view to_string(Reason reason) {
  switch (reason) {
    case Reason::NotVietnamMap: return "NotVietnamMap";
    case Reason::ContainsLandmark: return "ContainsLandmark";
    case Reason::ExcludesLandmarks: return "ExcludesLandmarks";
    case Reason::Error: return "Error";
  }
  return "Unknown";
}

std::optional<Label> parse_label(std::string_view token) {
  if (token == "Positive") return Label::Positive;
  if (token == "Negative") return Label::Negative;
  return std::nullopt;
}

std::optional<Reason> parse_reason(std::string_view token) {
  for (Reason r : kReasons) {
    if (to_string(r) == token) return r;
  }
  return std::nullopt;
}

Decision decide(bool is_vietnam_map, bool any_matched) {
  if (!is_vietnam_map) return {Label::Negative, Reason::NotVietnamMap};
  if (any_matched) return {Label::Negative, Reason::ContainsLandmark};
  return {Label::Positive, Reason::ExcludesLandmarks};
}

}  // namespace mapscreen::pipeline
