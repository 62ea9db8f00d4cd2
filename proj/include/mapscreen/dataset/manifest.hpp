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

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mapscreen/error.hpp"
#include "mapscreen/geometry.hpp"

namespace mapscreen::dataset {

enum class Category { NotMap, NotVietnamMap, VietnamMapWithIslands, VietnamMapWithoutIslands };
enum class Language { Vi, En, Mixed };
enum class Split { Train, Test };
enum class Polarity { Positive, Negative };

inline constexpr Category kCategories[] = {Category::NotMap, Category::NotVietnamMap,
                                           Category::VietnamMapWithIslands,
                                           Category::VietnamMapWithoutIslands};
inline constexpr Language kLanguages[] = {Language::Vi, Language::En, Language::Mixed};
inline constexpr Split kSplits[] = {Split::Train, Split::Test};

// Manifest tokens: not_map, not_vietnam_map, vietnam_map_with_islands,
// vietnam_map_without_islands; vi, en, mixed; train, test.
std::string_view to_string(Category category);
std::string_view to_string(Language language);
std::string_view to_string(Split split);
std::string_view to_string(Polarity polarity);
std::optional<Category> parse_category(std::string_view token);
std::optional<Language> parse_language(std::string_view token);
std::optional<Split> parse_split(std::string_view token);

bool is_vietnam_map(Category category);

struct BoxAnnotation {
  Quad polygon{};
  std::string term_label;  // landmark name the box covers

  friend bool operator==(const BoxAnnotation&, const BoxAnnotation&) = default;
};

struct ManifestEntry {
  std::string image_id;
  std::string path;  // relative to the manifest's directory
  Category category = Category::NotMap;
  Language language = Language::Mixed;
  Split split = Split::Test;
  std::vector<BoxAnnotation> boxes;

  friend bool operator==(const ManifestEntry&, const ManifestEntry&) = default;
};

// Positive only for a Vietnam map without either island group.
Polarity ground_truth_polarity(const ManifestEntry& entry);
Polarity ground_truth_polarity(Category category);

// A manifest line failed to parse. Line numbers are 1-based.
class ManifestError : public Error {
 public:
  ManifestError(std::size_t line, std::string field, const std::string& what);

  std::size_t line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

struct Manifest {
  std::vector<ManifestEntry> entries;
  std::vector<std::string> warnings;  // non-fatal schema issues, with line numbers
  std::filesystem::path base_dir;     // image paths resolve against this

  std::filesystem::path resolve(const ManifestEntry& entry) const { return base_dir / entry.path; }
};

// Strict JSON-lines parsing; blank lines are skipped. Throws ManifestError.
Manifest parse_manifest(std::istream& in, std::filesystem::path base_dir = {});
Manifest load_manifest(const std::filesystem::path& file);

std::string serialize_entry(const ManifestEntry& entry);
void write_manifest(std::ostream& out, const std::vector<ManifestEntry>& entries);
void save_manifest(const std::filesystem::path& file, const std::vector<ManifestEntry>& entries);

}  // namespace mapscreen::dataset
