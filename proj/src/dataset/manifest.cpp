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

#include "mapscreen/dataset/manifest.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "common/json_util.hpp"
#include "mapscreen/text/match.hpp"

namespace mapscreen::dataset {
namespace {

using detail::Json;

constexpr const char* kKnownFields[] = {"image_id", "path", "category", "language", "split", "boxes"};

const Json& required(const Json& obj, const char* key, std::size_t line) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw ManifestError(line, key, "missing required field");
  return *it;
}

std::string required_string(const Json& obj, const char* key, std::size_t line) {
  const Json& v = required(obj, key, line);
  if (!v.is_string()) throw ManifestError(line, key, "must be a string");
  return v.get<std::string>();
}

template <class T>
T required_token(const Json& obj, const char* key, std::size_t line,
                 std::optional<T> (*parse)(std::string_view)) {
  const std::string token = required_string(obj, key, line);
  const std::optional<T> value = parse(token);
  if (!value) throw ManifestError(line, key, "unknown token '" + token + "'");
  return *value;
}

bool names_policy_term(const std::string& label) {
  static const text::MatchPolicy policy = text::MatchPolicy::defaults();
  const text::NormalizedText normalized = text::normalize(label);
  return std::binary_search(policy.terms().begin(), policy.terms().end(), normalized);
}

ManifestEntry parse_line(const Json& obj, std::size_t line, std::vector<std::string>& warnings) {
  if (!obj.is_object()) throw ManifestError(line, "<line>", "expected a JSON object");
  for (const auto& item : obj.items()) {
    if (std::find(std::begin(kKnownFields), std::end(kKnownFields), item.key()) ==
        std::end(kKnownFields)) {
      throw ManifestError(line, item.key(), "unknown field");
    }
  }

  ManifestEntry entry;
  entry.image_id = required_string(obj, "image_id", line);
  if (entry.image_id.empty()) throw ManifestError(line, "image_id", "must not be empty");
  entry.path = required_string(obj, "path", line);
  if (entry.path.empty()) throw ManifestError(line, "path", "must not be empty");
  entry.category = required_token<Category>(obj, "category", line, parse_category);
  entry.language = required_token<Language>(obj, "language", line, parse_language);
  entry.split = required_token<Split>(obj, "split", line, parse_split);

  if (const auto it = obj.find("boxes"); it != obj.end()) {
    if (!it->is_array()) throw ManifestError(line, "boxes", "must be an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string field = "boxes[" + std::to_string(i) + "]";
      const Json& box = (*it)[i];
      if (!box.is_object()) throw ManifestError(line, field, "must be an object");
      const auto polygon = box.find("polygon");
      if (polygon == box.end()) throw ManifestError(line, field + ".polygon", "missing required field");
      std::string problem;
      const std::optional<Quad> quad = detail::quad_from_json(*polygon, problem);
      if (!quad) throw ManifestError(line, field + ".polygon", problem);
      if (is_degenerate(*quad)) throw ManifestError(line, field + ".polygon", "polygon has zero area");
      const auto label = box.find("term_label");
      if (label == box.end() || !label->is_string()) {
        throw ManifestError(line, field + ".term_label", "must be a string");
      }
      for (const auto& item : box.items()) {
        if (item.key() != "polygon" && item.key() != "term_label") {
          throw ManifestError(line, field + "." + item.key(), "unknown field");
        }
      }
      BoxAnnotation annotation{*quad, label->get<std::string>()};
      if (!names_policy_term(annotation.term_label)) {
        warnings.push_back("line " + std::to_string(line) + ": " + field + ".term_label '" +
                           annotation.term_label + "' does not name a landmark term");
      }
      entry.boxes.push_back(std::move(annotation));
    }
  }
  if (!entry.boxes.empty() && entry.category != Category::VietnamMapWithIslands) {
    warnings.push_back("line " + std::to_string(line) + ": boxes are only expected on " +
                       std::string(to_string(Category::VietnamMapWithIslands)) + " entries");
  }
  return entry;
}

}  // namespace

std::string_view to_string(Category category) {
  switch (category) {
    case Category::NotMap: return "not_map";
    case Category::NotVietnamMap: return "not_vietnam_map";
    case Category::VietnamMapWithIslands: return "vietnam_map_with_islands";
    case Category::VietnamMapWithoutIslands: return "vietnam_map_without_islands";
  }
  return "unknown";
}

std::string_view to_string(Language language) {
  switch (language) {
    case Language::Vi: return "vi";
    case Language::En: return "en";
    case Language::Mixed: return "mixed";
  }
  return "unknown";
}

std::string_view to_string(Split split) { return split == Split::Train ? "train" : "test"; }

std::string_view to_string(Polarity polarity) {
  return polarity == Polarity::Positive ? "Positive" : "Negative";
}

std::optional<Category> parse_category(std::string_view token) {
  for (Category c : kCategories) {
    if (to_string(c) == token) return c;
  }
  return std::nullopt;
}

std::optional<Language> parse_language(std::string_view token) {
  for (Language l : kLanguages) {
    if (to_string(l) == token) return l;
  }
  return std::nullopt;
}

std::optional<Split> parse_split(std::string_view token) {
  for (Split s : kSplits) {
    if (to_string(s) == token) return s;
  }
  return std::nullopt;
}

bool is_vietnam_map(Category category) {
  return category == Category::VietnamMapWithIslands ||
         category == Category::VietnamMapWithoutIslands;
}

Polarity ground_truth_polarity(Category category) {
  return category == Category::VietnamMapWithoutIslands ? Polarity::Positive : Polarity::Negative;
}

Polarity ground_truth_polarity(const ManifestEntry& entry) {
  return ground_truth_polarity(entry.category);
}

ManifestError::ManifestError(std::size_t line, std::string field, const std::string& what)
    : Error("line " + std::to_string(line) + ": field '" + field + "': " + what),
      line_(line),
      field_(std::move(field)) {}

Manifest parse_manifest(std::istream& in, std::filesystem::path base_dir) {
  Manifest manifest;
  manifest.base_dir = std::move(base_dir);
  std::map<std::string, std::size_t> first_line;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    Json obj;
    try {
      obj = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw ManifestError(line, "<line>", std::string("invalid JSON: ") + e.what());
    }
    ManifestEntry entry = parse_line(obj, line, manifest.warnings);
    const auto [it, inserted] = first_line.emplace(entry.image_id, line);
    if (!inserted) {
      throw ManifestError(line, "image_id",
                          "duplicate image_id '" + entry.image_id + "' (lines " +
                              std::to_string(it->second) + " and " + std::to_string(line) + ")");
    }
    manifest.entries.push_back(std::move(entry));
  }
  return manifest;
}

Manifest load_manifest(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error("cannot open manifest '" + file.string() + "'");
  return parse_manifest(in, file.parent_path());
}

std::string serialize_entry(const ManifestEntry& entry) {
  Json obj;
  obj["image_id"] = entry.image_id;
  obj["path"] = entry.path;
  obj["category"] = to_string(entry.category);
  obj["language"] = to_string(entry.language);
  obj["split"] = to_string(entry.split);
  obj["boxes"] = Json::array();
  for (const BoxAnnotation& box : entry.boxes) {
    Json b;
    b["polygon"] = detail::quad_to_json(box.polygon);
    b["term_label"] = box.term_label;
    obj["boxes"].push_back(std::move(b));
  }
  return obj.dump();
}

void write_manifest(std::ostream& out, const std::vector<ManifestEntry>& entries) {
  for (const ManifestEntry& entry : entries) out << serialize_entry(entry) << '\n';
}

void save_manifest(const std::filesystem::path& file, const std::vector<ManifestEntry>& entries) {
  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
  std::ofstream out(file, std::ios::binary);
  if (!out) throw Error("cannot write manifest '" + file.string() + "'");
  write_manifest(out, entries);
}

}  // namespace mapscreen::dataset
