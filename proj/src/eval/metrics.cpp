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

#include "mapscreen/eval/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <set>

namespace mapscreen::eval {
namespace {

std::string join_ids(const std::vector<std::string>& ids) {
  constexpr std::size_t kShown = 10;
  std::string out;
  for (std::size_t i = 0; i < ids.size() && i < kShown; ++i) {
    if (i > 0) out += ", ";
    out += ids[i];
  }
  if (ids.size() > kShown) out += ", ... (" + std::to_string(ids.size()) + " total)";
  return out;
}

std::string mismatch_message(const std::vector<std::string>& missing,
                             const std::vector<std::string>& extra) {
  std::string message = "verdict ids do not match ground truth";
  if (!missing.empty()) message += "; missing verdicts: " + join_ids(missing);
  if (!extra.empty()) message += "; unexpected verdicts: " + join_ids(extra);
  return message;
}

}  // namespace

void ConfusionCounts::add(dataset::Polarity predicted, dataset::Polarity truth) {
  const bool p = predicted == dataset::Polarity::Positive;
  const bool t = truth == dataset::Polarity::Positive;
  ++(p ? (t ? tp : fp) : (t ? fn : tn));
}

IdMismatchError::IdMismatchError(std::vector<std::string> missing, std::vector<std::string> extra)
    : Error(mismatch_message(missing, extra)), missing_(std::move(missing)), extra_(std::move(extra)) {}

ConfusionCounts confusion_from_verdicts(std::span<const pipeline::Verdict> verdicts,
                                        const std::map<std::string, dataset::Polarity>& truth) {
  std::set<std::string> seen;
  std::vector<std::string> extra;
  ConfusionCounts counts;
  for (const pipeline::Verdict& v : verdicts) {
    const auto it = truth.find(v.image_id);
    if (it == truth.end() || !seen.insert(v.image_id).second) {
      extra.push_back(v.image_id);
      continue;
    }
    const bool positive = !v.failed() && v.label == pipeline::Label::Positive;
    counts.add(positive ? dataset::Polarity::Positive : dataset::Polarity::Negative, it->second);
  }
  std::vector<std::string> missing;
  for (const auto& [id, polarity] : truth) {
    if (!seen.contains(id)) missing.push_back(id);
  }
  if (!missing.empty() || !extra.empty()) throw IdMismatchError(std::move(missing), std::move(extra));
  return counts;
}

Ratio precision(const ConfusionCounts& counts) {
  const std::size_t denominator = counts.tp + counts.fp;
  if (denominator == 0) return {0.0, true};
  return {static_cast<double>(counts.tp) / static_cast<double>(denominator), false};
}

Ratio recall(const ConfusionCounts& counts) {
  const std::size_t denominator = counts.tp + counts.fn;
  if (denominator == 0) return {0.0, true};
  return {static_cast<double>(counts.tp) / static_cast<double>(denominator), false};
}

double f1(double precision, double recall) {
  const double sum = precision + recall;
  if (sum <= 0.0) return 0.0;
  return 2.0 * precision * recall / sum;
}

std::string percent(double fraction) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.2f", 100.0 * fraction);
  return buffer;
}

}  // namespace mapscreen::eval
