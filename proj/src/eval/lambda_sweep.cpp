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

#include "mapscreen/eval/lambda_sweep.hpp"

#include <iomanip>
#include <map>
#include <sstream>

namespace mapscreen::eval {

double SweepRow::landmark_recall() const {
  if (landmark_total == 0) return 0.0;
  return static_cast<double>(landmark_detected) / static_cast<double>(landmark_total);
}

pipeline::Verdict redecide(const pipeline::Verdict& verdict, const text::MatchPolicy& policy) {
  if (verdict.failed() || verdict.reason == pipeline::Reason::NotVietnamMap) return verdict;
  pipeline::Verdict out = verdict;
  bool any_matched = false;
  for (pipeline::Evidence& e : out.evidence) {
    e.match = text::match_instance(e.instance.text, policy);
    any_matched = any_matched || e.match.matched();
  }
  const pipeline::Decision d = pipeline::decide(true, any_matched);
  out.label = d.label;
  out.reason = d.reason;
  return out;
}

std::vector<SweepRow> lambda_sweep(std::span<const pipeline::Verdict> verdicts,
                                   std::span<const dataset::ManifestEntry> entries,
                                   std::span<const std::size_t> lambdas,
                                   const text::MatchPolicy& base, Setting setting) {
  std::map<std::string, const dataset::ManifestEntry*> by_id;
  for (const dataset::ManifestEntry& e : entries) by_id.emplace(e.image_id, &e);

  std::vector<SweepRow> rows;
  rows.reserve(lambdas.size());
  for (std::size_t lambda : lambdas) {
    const text::MatchPolicy policy = base.with_lambda(lambda);
    SweepRow row;
    row.lambda = lambda;
    std::vector<pipeline::Verdict> redecided;
    redecided.reserve(verdicts.size());
    for (const pipeline::Verdict& v : verdicts) {
      pipeline::Verdict r = redecide(v, policy);
      for (const pipeline::Evidence& e : r.evidence) row.matched_instances += e.match.matched() ? 1 : 0;
      const auto it = by_id.find(v.image_id);
      if (it != by_id.end() && it->second->category == dataset::Category::VietnamMapWithIslands &&
          in_setting(it->second->language, setting)) {
        ++row.landmark_total;
        if (r.reason == pipeline::Reason::ContainsLandmark) ++row.landmark_detected;
      }
      redecided.push_back(std::move(r));
    }
    row.report = evaluate(redecided, entries, setting);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string render_sweep_table(std::span<const SweepRow> rows) {
  constexpr int kLabel = 22;
  constexpr int kCell = 10;
  std::ostringstream out;
  auto line = [&](const std::string& label, auto&& cell) {
    out << std::left << std::setw(kLabel) << label << std::right;
    for (const SweepRow& row : rows) out << std::setw(kCell) << cell(row);
    out << '\n';
  };
  line("Vocab Matching lambda", [](const SweepRow& r) { return std::to_string(r.lambda); });
  line("F1-Score", [](const SweepRow& r) { return percent(r.report.f1); });
  line("Precision", [](const SweepRow& r) { return percent(r.report.precision.value); });
  line("Recall", [](const SweepRow& r) { return percent(r.report.recall.value); });
  line("Landmark recall", [](const SweepRow& r) { return percent(r.landmark_recall()); });
  line("Matched instances", [](const SweepRow& r) { return std::to_string(r.matched_instances); });
  return out.str();
}

nlohmann::ordered_json sweep_to_json(std::span<const SweepRow> rows, const text::MatchPolicy& base) {
  nlohmann::ordered_json out;
  out["comparator"] = text::to_string(base.comparator());
  out["granularity"] = text::to_string(base.granularity());
  out["rows"] = nlohmann::ordered_json::array();
  for (const SweepRow& row : rows) {
    nlohmann::ordered_json r;
    r["lambda"] = row.lambda;
    r["matched_instances"] = row.matched_instances;
    r["landmark_detected"] = row.landmark_detected;
    r["landmark_total"] = row.landmark_total;
    r["landmark_recall"] = row.landmark_recall();
    r["report"] = to_json(row.report);
    out["rows"].push_back(std::move(r));
  }
  return out;
}

}  // namespace mapscreen::eval
