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

#include "mapscreen/eval/report.hpp"

#include <algorithm>
#include <map>

#include "mapscreen/eval/average_precision.hpp"

namespace mapscreen::eval {

std::string_view to_string(Setting setting) {
  switch (setting) {
    case Setting::Eng: return "ENG";
    case Setting::Vn: return "VN";
    case Setting::EngVn: return "ENG-VN";
  }
  return "";
}

std::optional<Setting> parse_setting(std::string_view token) {
  if (token == "eng" || token == "ENG") return Setting::Eng;
  if (token == "vn" || token == "VN") return Setting::Vn;
  if (token == "eng-vn" || token == "ENG-VN") return Setting::EngVn;
  return std::nullopt;
}

bool in_setting(dataset::Language language, Setting setting) {
  switch (setting) {
    case Setting::Eng: return language != dataset::Language::Vi;
    case Setting::Vn: return language != dataset::Language::En;
    case Setting::EngVn: return true;
  }
  return false;
}

EvalReport make_report(Setting setting, const ConfusionCounts& counts) {
  EvalReport report;
  report.setting = setting;
  report.counts = counts;
  report.precision = precision(counts);
  report.recall = recall(counts);
  report.f1 = f1(report.precision.value, report.recall.value);
  return report;
}

EvalReport evaluate(std::span<const pipeline::Verdict> verdicts,
                    std::span<const dataset::ManifestEntry> entries, Setting setting,
                    std::optional<dataset::Split> split) {
  // Validate the full join first so a mismatch is never hidden by filtering.
  std::map<std::string, dataset::Polarity> all_truth;
  for (const dataset::ManifestEntry& e : entries) all_truth.emplace(e.image_id, dataset::ground_truth_polarity(e));
  confusion_from_verdicts(verdicts, all_truth);

  std::map<std::string, const dataset::ManifestEntry*> selected;
  for (const dataset::ManifestEntry& e : entries) {
    if (in_setting(e.language, setting) && (!split || e.split == *split)) selected.emplace(e.image_id, &e);
  }
  std::vector<pipeline::Verdict> kept;
  std::map<std::string, dataset::Polarity> truth;
  std::vector<RankedPrediction> composite;
  std::vector<RankedPrediction> vietnam_map;
  for (const pipeline::Verdict& v : verdicts) {
    const auto it = selected.find(v.image_id);
    if (it == selected.end()) continue;
    kept.push_back(v);
    const dataset::ManifestEntry& entry = *it->second;
    truth.emplace(v.image_id, dataset::ground_truth_polarity(entry));
    composite.push_back({v.image_id, composite_rank_score(v), dataset::ground_truth_polarity(entry)});
    vietnam_map.push_back({v.image_id, v.classifier_score,
                           dataset::is_vietnam_map(entry.category) ? dataset::Polarity::Positive
                                                                   : dataset::Polarity::Negative});
  }

  EvalReport report = make_report(setting, confusion_from_verdicts(kept, truth));
  auto has_positive = [](const std::vector<RankedPrediction>& ps) {
    return std::any_of(ps.begin(), ps.end(), [](const RankedPrediction& p) {
      return p.ground_truth == dataset::Polarity::Positive;
    });
  };
  if (has_positive(composite)) report.ap = average_precision(composite);
  if (has_positive(vietnam_map)) report.ap_vietnam_map = average_precision(vietnam_map);
  return report;
}

nlohmann::ordered_json to_json(const EvalReport& report) {
  nlohmann::ordered_json out;
  out["setting"] = to_string(report.setting);
  out["counts"] = {{"tp", report.counts.tp},
                   {"fp", report.counts.fp},
                   {"fn", report.counts.fn},
                   {"tn", report.counts.tn},
                   {"total", report.counts.total()}};
  out["precision"] = report.precision.value;
  out["recall"] = report.recall.value;
  out["f1"] = report.f1;
  out["percent"] = {{"precision", percent(report.precision.value)},
                    {"recall", percent(report.recall.value)},
                    {"f1", percent(report.f1)}};
  out["degenerate"] = {{"precision", report.precision.degenerate},
                       {"recall", report.recall.degenerate}};
  out["ap"] = report.ap ? nlohmann::ordered_json(*report.ap) : nlohmann::ordered_json(nullptr);
  out["ap_vietnam_map"] =
      report.ap_vietnam_map ? nlohmann::ordered_json(*report.ap_vietnam_map) : nlohmann::ordered_json(nullptr);
  return out;
}

}  // namespace mapscreen::eval
