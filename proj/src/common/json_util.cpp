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

#include "common/json_util.hpp"

#include <array>
#include <cmath>

namespace mapscreen::detail {

Json quad_to_json(const Quad& quad) {
  Json out = Json::array();
  for (double v : flatten(quad)) out.push_back(v);
  return out;
}

std::optional<Quad> quad_from_json(const Json& value, std::string& problem) {
  if (!value.is_array()) {
    problem = "expected an array of 8 numbers";
    return std::nullopt;
  }
  if (value.size() != 8) {
    problem = "expected 4 vertices (8 numbers), got " + std::to_string(value.size()) + " numbers";
    return std::nullopt;
  }
  std::array<double, 8> flat{};
  for (std::size_t i = 0; i < flat.size(); ++i) {
    if (!value[i].is_number()) {
      problem = "polygon coordinate " + std::to_string(i) + " is not a number";
      return std::nullopt;
    }
    flat[i] = value[i].get<double>();
    if (!std::isfinite(flat[i])) {
      problem = "polygon coordinate " + std::to_string(i) + " is not finite";
      return std::nullopt;
    }
  }
  return quad_from_flat(flat);
}

}  // namespace mapscreen::detail
