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

#include <cstddef>
#include <optional>
#include <string_view>

#include "mapscreen/text/normalize.hpp"

namespace mapscreen::text {

// Unit-cost edit distance over Unicode scalar values.
std::size_t levenshtein(std::u32string_view a, std::u32string_view b);

// Exact distance when it is <= bound, std::nullopt otherwise. Runs a banded
// DP of width 2*bound+1 and stops as soon as a whole row exceeds the bound.
std::optional<std::size_t> levenshtein_bounded(std::u32string_view a, std::u32string_view b,
                                               std::size_t bound);

inline std::size_t levenshtein(const NormalizedText& a, const NormalizedText& b) {
  return levenshtein(std::u32string_view(a.value()), std::u32string_view(b.value()));
}

inline std::optional<std::size_t> levenshtein_bounded(const NormalizedText& a,
                                                      const NormalizedText& b,
                                                      std::size_t bound) {
  return levenshtein_bounded(std::u32string_view(a.value()), std::u32string_view(b.value()),
                             bound);
}

}  // namespace mapscreen::text
