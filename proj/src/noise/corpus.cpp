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

#include "mapscreen/noise/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>

#include "common/json_util.hpp"
#include "mapscreen/error.hpp"
#include "mapscreen/text/levenshtein.hpp"
#include "mapscreen/text/match.hpp"
#include "mapscreen/text/normalize.hpp"

namespace mapscreen::noise {
namespace {

using dataset::Category;
using dataset::Language;
using dataset::Split;

constexpr double kSplitWeights[] = {4801, 2057};  // train, test

std::vector<double> language_weights(Category category) {
  switch (category) {
    case Category::VietnamMapWithIslands: return {866, 136, 0};
    case Category::VietnamMapWithoutIslands: return {291, 788, 0};
    default: return {0, 0, 1};
  }
}

struct Landmark {
  const char* text;
  const char* term;
};

// Per island group, the spellings a map of that language prints.
const std::vector<std::vector<Landmark>>& landmark_groups(Language language) {
  static const std::vector<std::vector<Landmark>> vi = {
      {{"Hoàng Sa", "Hoang Sa"}, {"HOÀNG SA", "Hoang Sa"}},
      {{"Trường Sa", "Truong Sa"}, {"TRƯỜNG SA", "Truong Sa"}},
  };
  static const std::vector<std::vector<Landmark>> en = {
      {{"Paracel", "Paracel"}, {"PARACEL", "Paracel"}, {"Hoang Sa", "Hoang Sa"}},
      {{"Spratly", "Spratly"}, {"SPRATLY", "Spratly"}, {"Truong Sa", "Truong Sa"}},
  };
  return language == Language::Vi ? vi : en;
}

const std::vector<std::string>& place_names(Language language) {
  static const std::vector<std::string> vi = {
      "Hà Nội",   "Đà Nẵng",   "Huế",       "Hải Phòng",   "Cần Thơ",   "Nha Trang",
      "Đà Lạt",   "Quy Nhơn",  "Phú Quốc",  "Côn Đảo",     "Hạ Long",   "Thành phố Hồ Chí Minh",
      "Biển Đông", "Vịnh Bắc Bộ", "Lào Cai", "Điện Biên Phủ", "Cà Mau", "Buôn Ma Thuột",
      "Thanh Hóa", "Quảng Ninh", "Vũng Tàu", "Hà Giang",  "Sông Hồng", "Tây Nguyên",
  };
  static const std::vector<std::string> en = {
      "Hanoi",          "Da Nang",          "Hai Phong",        "Can Tho",       "Nha Trang",
      "Ho Chi Minh City", "Mekong Delta",   "Gulf of Tonkin",   "Gulf of Thailand", "Cambodia",
      "Laos",           "China",            "Phu Quoc",         "Con Dao",       "Ha Long Bay",
      "South China Sea", "Red River",       "Central Highlands", "Vung Tau",     "Quang Ninh",
  };
  return language == Language::Vi ? vi : en;
}

std::size_t distance_to_terms(const std::string& name) {
  const text::NormalizedText folded = text::normalize(name);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  static const text::MatchPolicy policy = text::MatchPolicy::defaults();
  for (const text::NormalizedText& term : policy.terms()) {
    best = std::min(best, text::levenshtein(folded, term));
  }
  return best;
}

double rounded(double x) { return std::round(x * 1e4) / 1e4; }

Quad text_box(std::size_t slot, const std::string& text) {
  const double x0 = 16.0;
  const double y0 = 24.0 + 48.0 * static_cast<double>(slot);
  const double w = 8.0 + 14.0 * static_cast<double>(text::to_utf32(text).size());
  const double h = 32.0;
  return {Point{x0, y0}, Point{x0 + w, y0}, Point{x0 + w, y0 + h}, Point{x0, y0 + h}};
}

std::string format_id(std::size_t n, std::size_t width) {
  std::string digits = std::to_string(n);
  if (digits.size() < width) digits.insert(0, width - digits.size(), '0');
  return "syn-" + digits;
}

struct Slot {
  Category category;
  Language language;
  Split split;
};

struct PlannedText {
  std::string text;
  std::string term;
};

class Generator {
 public:
  explicit Generator(const NoiseSpec& spec) : spec_(spec), rng_(spec.seed) {
    for (Language language : {Language::Vi, Language::En}) {
      auto names = distractor_names(language, spec.edits);
      if (names.empty()) {
        throw ConfigError("edits", "no distractor place name stays clear of the landmark terms at k=" +
                                       std::to_string(spec.edits));
      }
      pools_[static_cast<int>(language)] = std::move(names);
    }
    auto& mixed = pools_[static_cast<int>(Language::Mixed)];
    mixed = pools_[0];
    mixed.insert(mixed.end(), pools_[1].begin(), pools_[1].end());
  }

  Rng& rng() { return rng_; }

  void emit(const std::string& id, const Slot& slot, SyntheticCorpus& corpus) {
    dataset::ManifestEntry entry;
    entry.image_id = id;
    entry.path = "images/" + id + ".png";
    entry.category = slot.category;
    entry.language = slot.language;
    entry.split = slot.split;

    const bool vietnam = dataset::is_vietnam_map(slot.category);
    const double score = rounded(vietnam ? 0.6 + 0.39 * rng_.uniform01() : 0.4 * rng_.uniform01());
    corpus.cache.add_classification(id, {vietnam, score});

    std::vector<PlannedText> planned = plan_texts(slot);
    std::vector<inference::TextRegion> regions;
    for (std::size_t i = 0; i < planned.size(); ++i) {
      TextRecord record;
      record.image_id = id;
      record.term = planned[i].term;
      record.perturbation = perturb(planned[i].text, spec_, rng_);
      record.polygon = text_box(i, record.perturbation.perturbed);

      const inference::TextRegion region{record.polygon, rounded(0.7 + 0.3 * rng_.uniform01())};
      regions.push_back(region);
      corpus.cache.add_recognition(
          id, {region, record.perturbation.perturbed, rounded(0.5 + 0.5 * rng_.uniform01())});
      if (slot.category == Category::VietnamMapWithIslands && record.is_landmark()) {
        entry.boxes.push_back({record.polygon, record.term});
      }
      corpus.texts.push_back(std::move(record));
    }
    corpus.cache.add_detection(id, std::move(regions));
    corpus.entries.push_back(std::move(entry));
  }

 private:
  const std::vector<std::string>& pool(Language language) const {
    return pools_[static_cast<int>(language)];
  }

  void add_distractors(std::vector<PlannedText>& out, Language language, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out.push_back({rng_.pick(pool(language)), ""});
  }

  void add_landmark(std::vector<PlannedText>& out, Language language, std::size_t group) {
    const Landmark& chosen = rng_.pick(landmark_groups(language)[group]);
    out.push_back({chosen.text, chosen.term});
  }

  std::vector<PlannedText> plan_texts(const Slot& slot) {
    std::vector<PlannedText> out;
    switch (slot.category) {
      case Category::NotMap:
        add_distractors(out, slot.language, rng_.uniform_index(3));
        break;
      case Category::NotVietnamMap:
        add_distractors(out, slot.language, 1 + rng_.uniform_index(3));
        if (rng_.chance(0.3)) {
          const Language language = rng_.chance(0.5) ? Language::Vi : Language::En;
          add_landmark(out, language, rng_.uniform_index(2));
        }
        break;
      case Category::VietnamMapWithIslands: {
        const std::size_t which = rng_.uniform_index(3);  // 0, 1 or both
        if (which != 1) add_landmark(out, slot.language, 0);
        if (which != 0) add_landmark(out, slot.language, 1);
        add_distractors(out, slot.language, 1 + rng_.uniform_index(3));
        break;
      }
      case Category::VietnamMapWithoutIslands:
        add_distractors(out, slot.language, 1 + rng_.uniform_index(4));
        break;
    }
    for (std::size_t i = out.size(); i > 1; --i) std::swap(out[i - 1], out[rng_.uniform_index(i)]);
    return out;
  }

  NoiseSpec spec_;
  Rng rng_;
  std::array<std::vector<std::string>, 3> pools_;
};

}  // namespace

CategoryMix reference_mix() {
  const double total = 2000 + 2777 + 1002 + 1079;
  return {2000 / total, 2777 / total, 1002 / total, 1079 / total};
}

CategoryMix parse_mix(std::string_view csv) {
  CategoryMix mix{};
  std::size_t index = 0;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const std::size_t comma = std::min(csv.find(',', start), csv.size());
    const std::string token(csv.substr(start, comma - start));
    if (index >= mix.size()) throw ConfigError("mix", "expected 4 comma-separated weights");
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != token.size()) throw ConfigError("mix", "'" + token + "' is not a number");
    mix[index++] = value;
    start = comma + 1;
  }
  if (index != mix.size()) throw ConfigError("mix", "expected 4 comma-separated weights");
  double sum = 0.0;
  for (double w : mix) {
    if (!std::isfinite(w) || w < 0.0) throw ConfigError("mix", "weights must be non-negative");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-6) throw ConfigError("mix", "weights must sum to 1");
  return mix;
}

std::vector<std::size_t> apportion(std::size_t total, const std::vector<double>& weights) {
  const double sum = std::accumulate(weights.begin(), weights.end(), 0.0);
  std::vector<std::size_t> counts(weights.size(), 0);
  if (total == 0 || sum <= 0.0) return counts;
  std::vector<double> remainder(weights.size(), 0.0);
  std::size_t assigned = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const double exact = static_cast<double>(total) * weights[i] / sum;
    counts[i] = static_cast<std::size_t>(std::floor(exact));
    remainder[i] = exact - std::floor(exact);
    assigned += counts[i];
  }
  std::vector<std::size_t> order(weights.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return remainder[a] > remainder[b]; });
  for (std::size_t i = 0; assigned < total; ++i, ++assigned) ++counts[order[i % order.size()]];
  return counts;
}

std::vector<std::string> distractor_names(dataset::Language language, std::size_t edits) {
  const std::size_t floor = std::max<std::size_t>(4, 2 * edits + 2);
  std::vector<std::string> out;
  auto collect = [&](Language l) {
    for (const std::string& name : place_names(l)) {
      if (distance_to_terms(name) >= floor) out.push_back(name);
    }
  };
  if (language == Language::Mixed) {
    collect(Language::Vi);
    collect(Language::En);
  } else {
    collect(language);
  }
  return out;
}

SyntheticCorpus generate_corpus(std::size_t size, const CategoryMix& mix, const NoiseSpec& spec) {
  if (size == 0) throw ConfigError("size", "corpus size must be at least 1");
  double sum = 0.0;
  for (double w : mix) {
    if (!std::isfinite(w) || w < 0.0) throw ConfigError("mix", "weights must be non-negative");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-6) throw ConfigError("mix", "weights must sum to 1");
  spec.validate();

  Generator generator(spec);
  std::vector<Slot> slots;
  const auto per_category = apportion(size, {mix.begin(), mix.end()});
  for (std::size_t c = 0; c < per_category.size(); ++c) {
    const Category category = dataset::kCategories[c];
    const auto per_language = apportion(per_category[c], language_weights(category));
    for (std::size_t l = 0; l < per_language.size(); ++l) {
      const auto per_split =
          apportion(per_language[l], {std::begin(kSplitWeights), std::end(kSplitWeights)});
      for (std::size_t s = 0; s < per_split.size(); ++s) {
        slots.insert(slots.end(), per_split[s],
                     Slot{category, dataset::kLanguages[l], dataset::kSplits[s]});
      }
    }
  }

  Rng& rng = generator.rng();
  for (std::size_t i = slots.size(); i > 1; --i) std::swap(slots[i - 1], slots[rng.uniform_index(i)]);

  const std::size_t width = std::max<std::size_t>(6, std::to_string(size).size());
  SyntheticCorpus corpus;
  for (std::size_t i = 0; i < slots.size(); ++i) generator.emit(format_id(i + 1, width), slots[i], corpus);
  return corpus;
}

void SyntheticCorpus::save(const std::filesystem::path& dir) const {
  std::filesystem::create_directories(dir);
  dataset::save_manifest(dir / "manifest.jsonl", entries);
  cache.save(dir / "predictions");

  std::ofstream out(dir / "perturbations.jsonl", std::ios::binary);
  for (const TextRecord& record : texts) {
    detail::Json line;
    line["image_id"] = record.image_id;
    line["polygon"] = detail::quad_to_json(record.polygon);
    line["term"] = record.is_landmark() ? detail::Json(record.term) : detail::Json(nullptr);
    line["original"] = record.perturbation.original;
    line["perturbed"] = record.perturbation.perturbed;
    line["ops"] = detail::Json::array();
    for (EditOp op : record.perturbation.applied) line["ops"].push_back(to_string(op));
    line["distance"] = record.perturbation.distance;
    out << line.dump() << '\n';
  }
  if (!out) throw Error("cannot write " + (dir / "perturbations.jsonl").string());
}

}  // namespace mapscreen::noise
