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
#include <span>
#include <string>

#include <json.hpp>

#include "mapscreen/dataset/manifest.hpp"

namespace mapscreen::dataset {

// Image counts per (category, language, split).
class DatasetStats {
 public:
  std::size_t count(Category category, Language language, Split split) const;
  std::size_t category_total(Category category) const;
  std::size_t category_total(Category category, Split split) const;
  std::size_t split_total(Split split) const;
  std::size_t total() const;

  void add(const ManifestEntry& entry);

  nlohmann::ordered_json to_json() const;
  // Rows in the layout of the dataset statistics table: type, language,
  // train, test, total.
  std::string render_table() const;

  friend bool operator==(const DatasetStats&, const DatasetStats&) = default;

 private:
  std::array<std::array<std::array<std::size_t, 2>, 3>, 4> cells_{};
};

DatasetStats compute_stats(std::span<const ManifestEntry> entries);

}  // namespace mapscreen::dataset
