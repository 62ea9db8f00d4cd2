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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mapscreen/text/normalize.hpp"

namespace mapscreen::text {

enum class Comparator {
  StrictLess,    // distance < lambda
  InclusiveLeq,  // distance <= lambda
};

enum class Granularity {
  WholeInstance,  // one distance per recognized string
  TokenWindow,    // best over every window of one or two adjacent tokens
};

std::string_view to_string(Comparator comparator);
std::string_view to_string(Granularity granularity);
// Config spellings: "strict" | "inclusive", "instance" | "token".
std::optional<Comparator> parse_comparator(std::string_view token);
std::optional<Granularity> parse_granularity(std::string_view token);

// Vocabulary plus acceptance threshold. Terms are normalized, deduplicated
// and kept in lexicographic order, which is also the tie-break order.
class MatchPolicy {
 public:
  static constexpr std::size_t kDefaultLambda = 2;

  // Throws ConfigError when no term survives normalization.
  MatchPolicy(std::span<const std::string> terms, std::size_t lambda,
              Comparator comparator = Comparator::StrictLess,
              Granularity granularity = Granularity::WholeInstance);

  // {"hoang sa", "truong sa", "spratly", "paracel"}, lambda 2, strict, whole instance.
  static MatchPolicy defaults();
  static std::vector<std::string> default_terms();

  const std::vector<NormalizedText>& terms() const noexcept { return terms_; }
  std::size_t lambda() const noexcept { return lambda_; }
  Comparator comparator() const noexcept { return comparator_; }
  Granularity granularity() const noexcept { return granularity_; }

  bool accepts(std::size_t distance) const noexcept;
  // Largest distance the comparator accepts; nullopt for strict with lambda 0.
  std::optional<std::size_t> max_accepted_distance() const noexcept;

  MatchPolicy with_lambda(std::size_t lambda) const;
  MatchPolicy with_comparator(Comparator comparator) const;
  MatchPolicy with_granularity(Granularity granularity) const;

 private:
  MatchPolicy() = default;

  std::vector<NormalizedText> terms_;
  std::size_t lambda_ = kDefaultLambda;
  Comparator comparator_ = Comparator::StrictLess;
  Granularity granularity_ = Granularity::WholeInstance;
};

struct TermHit {
  std::string term;  // normalized term, UTF-8
  std::size_t distance = 0;

  friend bool operator==(const TermHit&, const TermHit&) = default;
};

struct MatchResult {
  std::optional<TermHit> hit;
  NormalizedText input_normalized;

  bool matched() const noexcept { return hit.has_value(); }
};

struct MatchSummary {
  bool any_matched = false;
  std::vector<MatchResult> matches;  // one per input, input order

  std::size_t matched_count() const noexcept;
};

MatchResult match_instance(std::string_view text, const MatchPolicy& policy);
MatchSummary match_any(std::span<const std::string> instances, const MatchPolicy& policy);

}  // namespace mapscreen::text
