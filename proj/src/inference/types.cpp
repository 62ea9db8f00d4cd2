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

#include "mapscreen/inference/types.hpp"

namespace mapscreen::inference {

std::string_view to_string(BackendKind kind) {
  switch (kind) {
    case BackendKind::Mock: return "mock";
    case BackendKind::Cached: return "cached";
    case BackendKind::ModelFile: return "model";
  }
  return "unknown";
}

std::optional<BackendKind> parse_backend_kind(std::string_view token) {
  if (token == "mock") return BackendKind::Mock;
  if (token == "cached") return BackendKind::Cached;
  if (token == "model" || token == "model-file") return BackendKind::ModelFile;
  return std::nullopt;
}

}  // namespace mapscreen::inference
