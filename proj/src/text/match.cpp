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

#include "mapscreen/text/match.hpp"

#include <algorithm>

#include "mapscreen/error.hpp"
#include "mapscreen/text/levenshtein.hpp"

namespace mapscreen::text {
namespace {

// Every contiguous window of one or two space-separated tokens.
std::vector<std::u32string_view> token_windows(const std::u32string& text) {
  std::vector<std::pair<std::size_t, std::size_t>> tokens;  // [begin, end)
  std::size_t begin = 0;
  while (begin < text.size()) {
    std::size_t end = text.find(U' ', begin);
    if (end == std::u32string::npos) end = text.size();
    tokens.emplace_back(begin, end);
    begin = end + 1;
  }
  std::vector<std::u32string_view> windows;
  const std::u32string_view all(text);
  for (std::size_t t = 0; t < tokens.size(); ++t) {
    windows.push_back(all.substr(tokens[t].first, tokens[t].second - tokens[t].first));
    if (t + 1 < tokens.size()) {
      windows.push_back(all.substr(tokens[t].first, tokens[t + 1].second - tokens[t].first));
    }
  }
  return windows;
}

}  // namespace

std::string_view to_string(Comparator comparator) {
  return comparator == Comparator::StrictLess ? "strict" : "inclusive";
}

std::string_view to_string(Granularity granularity) {
  return granularity == Granularity::WholeInstance ? "instance" : "token";
}

std::optional<Comparator> parse_comparator(std::string_view token) {
  if (token == "strict") return Comparator::StrictLess;
  if (token == "inclusive") return Comparator::InclusiveLeq;
  return std::nullopt;
}

std::optional<Granularity> parse_granularity(std::string_view token) {
  if (token == "instance") return Granularity::WholeInstance;
  if (token == "token") return Granularity::TokenWindow;
  return std::nullopt;
}

MatchPolicy::MatchPolicy(std::span<const std::string> terms, std::size_t lambda,
                         Comparator comparator, Granularity granularity)
    : lambda_(lambda), comparator_(comparator), granularity_(granularity) {
  for (const std::string& term : terms) {
    NormalizedText normalized = normalize(term);
    if (!normalized.empty()) terms_.push_back(std::move(normalized));
  }
  std::sort(terms_.begin(), terms_.end());
  terms_.erase(std::unique(terms_.begin(), terms_.end()), terms_.end());
  if (terms_.empty()) throw ConfigError("terms", "vocabulary must contain at least one non-blank term");
}

std::vector<std::string> MatchPolicy::default_terms() {
  return {"Hoang Sa", "Truong Sa", "Spratly", "Paracel"};
}

MatchPolicy MatchPolicy::defaults() {
  const std::vector<std::string> terms = default_terms();
  return MatchPolicy(terms, kDefaultLambda);
}

bool MatchPolicy::accepts(std::size_t distance) const noexcept {
  return comparator_ == Comparator::StrictLess ? distance < lambda_ : distance <= lambda_;
}

std::optional<std::size_t> MatchPolicy::max_accepted_distance() const noexcept {
  if (comparator_ == Comparator::InclusiveLeq) return lambda_;
  if (lambda_ == 0) return std::nullopt;
  return lambda_ - 1;
}

MatchPolicy MatchPolicy::with_lambda(std::size_t lambda) const {
  MatchPolicy copy = *this;
  copy.lambda_ = lambda;
  return copy;
}

MatchPolicy MatchPolicy::with_comparator(Comparator comparator) const {
  MatchPolicy copy = *this;
  copy.comparator_ = comparator;
  return copy;
}

MatchPolicy MatchPolicy::with_granularity(Granularity granularity) const {
  MatchPolicy copy = *this;
  copy.granularity_ = granularity;
  return copy;
}

std::size_t MatchSummary::matched_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(matches.begin(), matches.end(), [](const MatchResult& m) { return m.matched(); }));
}

MatchResult match_instance(std::string_view text, const MatchPolicy& policy) {
  MatchResult result;
  result.input_normalized = normalize(text);
  const std::u32string& input = result.input_normalized.value();
  const std::optional<std::size_t> limit = policy.max_accepted_distance();
  if (input.empty() || !limit) return result;

  std::vector<std::u32string_view> candidates;
  if (policy.granularity() == Granularity::TokenWindow) {
    candidates = token_windows(input);
  } else {
    candidates.emplace_back(input);
  }

  // Terms are sorted, so keeping only strictly better distances leaves the
  // lexicographically first term on ties. The bound tightens as we go.
  std::optional<std::size_t> best;
  const NormalizedText* best_term = nullptr;
  for (const NormalizedText& term : policy.terms()) {
    const std::size_t bound = best ? *best - 1 : *limit;
    for (std::u32string_view candidate : candidates) {
      const auto d = levenshtein_bounded(candidate, std::u32string_view(term.value()), bound);
      if (d && (!best || *d < *best)) {
        best = d;
        best_term = &term;
        if (*d == 0) break;
      }
    }
    if (best && *best == 0) break;
  }
  if (best) result.hit = TermHit{best_term->utf8(), *best};
  return result;
}

MatchSummary match_any(std::span<const std::string> instances, const MatchPolicy& policy) {
  MatchSummary summary;
  summary.matches.reserve(instances.size());
  for (const std::string& text : instances) {
    summary.matches.push_back(match_instance(text, policy));
    summary.any_matched = summary.any_matched || summary.matches.back().matched();
  }
  return summary;
}

}  // namespace mapscreen::text
