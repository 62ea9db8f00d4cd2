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
#include <map>
#include <span>
#include <string>
#include <vector>

#include "mapscreen/dataset/manifest.hpp"
#include "mapscreen/error.hpp"
#include "mapscreen/pipeline/verdict.hpp"

namespace mapscreen::eval {

struct ConfusionCounts {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  std::size_t tn = 0;

  std::size_t total() const noexcept { return tp + fp + fn + tn; }
  void add(dataset::Polarity predicted, dataset::Polarity truth);

  friend bool operator==(const ConfusionCounts&, const ConfusionCounts&) = default;
};

// Verdict and ground-truth id sets differ.
class IdMismatchError : public Error {
 public:
  IdMismatchError(std::vector<std::string> missing, std::vector<std::string> extra);

  // Ground-truth ids without a verdict, and verdict ids without ground truth.
  const std::vector<std::string>& missing() const noexcept { return missing_; }
  const std::vector<std::string>& extra() const noexcept { return extra_; }

 private:
  std::vector<std::string> missing_;
  std::vector<std::string> extra_;
};

// Error verdicts count as predicted Negative. Throws IdMismatchError unless
// both sides cover exactly the same ids.
ConfusionCounts confusion_from_verdicts(std::span<const pipeline::Verdict> verdicts,
                                        const std::map<std::string, dataset::Polarity>& truth);

// A ratio whose denominator may be zero; 0/0 is reported as 0 and flagged.
struct Ratio {
  double value = 0.0;
  bool degenerate = false;
};

Ratio precision(const ConfusionCounts& counts);
Ratio recall(const ConfusionCounts& counts);

// Harmonic mean; 0 when both are 0. Scale-free, so percentages work too.
double f1(double precision, double recall);

// Two decimals, as the result tables print percentages: 0.85512 -> "85.51".
std::string percent(double fraction);

}  // namespace mapscreen::eval
