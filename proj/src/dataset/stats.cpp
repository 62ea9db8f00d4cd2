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

#include "mapscreen/dataset/stats.hpp"

#include <iomanip>
#include <sstream>

namespace mapscreen::dataset {
namespace {

std::size_t index(Category c) { return static_cast<std::size_t>(c); }
std::size_t index(Language l) { return static_cast<std::size_t>(l); }
std::size_t index(Split s) { return static_cast<std::size_t>(s); }

std::string_view label(Category category) {
  switch (category) {
    case Category::NotMap: return "Not maps";
    case Category::NotVietnamMap: return "Not Vietnam maps";
    case Category::VietnamMapWithIslands: return "Vietnam maps containing (TS or HS)";
    case Category::VietnamMapWithoutIslands: return "Vietnam maps not containing (TS and HS)";
  }
  return "";
}

std::string_view label(Language language) {
  switch (language) {
    case Language::Vi: return "Vietnamese";
    case Language::En: return "English";
    case Language::Mixed: return "Mixed";
  }
  return "";
}

}  // namespace

void DatasetStats::add(const ManifestEntry& entry) {
  ++cells_[index(entry.category)][index(entry.language)][index(entry.split)];
}

std::size_t DatasetStats::count(Category category, Language language, Split split) const {
  return cells_[index(category)][index(language)][index(split)];
}

std::size_t DatasetStats::category_total(Category category, Split split) const {
  std::size_t sum = 0;
  for (Language l : kLanguages) sum += count(category, l, split);
  return sum;
}

std::size_t DatasetStats::category_total(Category category) const {
  return category_total(category, Split::Train) + category_total(category, Split::Test);
}

std::size_t DatasetStats::split_total(Split split) const {
  std::size_t sum = 0;
  for (Category c : kCategories) sum += category_total(c, split);
  return sum;
}

std::size_t DatasetStats::total() const { return split_total(Split::Train) + split_total(Split::Test); }

nlohmann::ordered_json DatasetStats::to_json() const {
  nlohmann::ordered_json out;
  out["total"] = total();
  out["train"] = split_total(Split::Train);
  out["test"] = split_total(Split::Test);
  auto& categories = out["categories"];
  categories = nlohmann::ordered_json::object();
  for (Category c : kCategories) {
    nlohmann::ordered_json cat;
    cat["total"] = category_total(c);
    cat["train"] = category_total(c, Split::Train);
    cat["test"] = category_total(c, Split::Test);
    nlohmann::ordered_json languages = nlohmann::ordered_json::object();
    for (Language l : kLanguages) {
      nlohmann::ordered_json cell;
      cell["train"] = count(c, l, Split::Train);
      cell["test"] = count(c, l, Split::Test);
      cell["total"] = count(c, l, Split::Train) + count(c, l, Split::Test);
      languages[std::string(to_string(l))] = std::move(cell);
    }
    cat["languages"] = std::move(languages);
    categories[std::string(to_string(c))] = std::move(cat);
  }
  return out;
}

std::string DatasetStats::render_table() const {
  std::ostringstream out;
  auto row = [&out](std::string_view type, std::string_view language, std::size_t train,
                    std::size_t test) {
    out << std::left << std::setw(42) << type << std::setw(12) << language << std::right
        << std::setw(8) << train << std::setw(8) << test << std::setw(8) << train + test << '\n';
  };
  out << std::left << std::setw(42) << "Type of images" << std::setw(12) << "Language" << std::right
      << std::setw(8) << "#Train" << std::setw(8) << "#Test" << std::setw(8) << "Total" << '\n';
  for (Category c : kCategories) {
    std::size_t used = 0;
    for (Language l : kLanguages) {
      if (count(c, l, Split::Train) + count(c, l, Split::Test) == 0) continue;
      row(used == 0 ? label(c) : "", label(l), count(c, l, Split::Train), count(c, l, Split::Test));
      ++used;
    }
    if (used == 0) row(label(c), "-", 0, 0);
    if (used > 1) row("", "Sub-total", category_total(c, Split::Train), category_total(c, Split::Test));
  }
  row("Total", "", split_total(Split::Train), split_total(Split::Test));
  return out.str();
}

DatasetStats compute_stats(std::span<const ManifestEntry> entries) {
  DatasetStats stats;
  for (const ManifestEntry& entry : entries) stats.add(entry);
  return stats;
}

}  // namespace mapscreen::dataset
