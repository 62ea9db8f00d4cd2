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

#include <json.hpp>

#include "mapscreen/geometry.hpp"

namespace mapscreen::detail {

using Json = nlohmann::ordered_json;

nlohmann::ordered_json quad_to_json(const Quad& quad);

// Reads a flat array of exactly 8 finite numbers. On failure returns nullopt
// and fills `problem`.
std::optional<Quad> quad_from_json(const nlohmann::ordered_json& value, std::string& problem);

}  // namespace mapscreen::detail
