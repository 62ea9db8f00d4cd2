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

#include "mapscreen/text/levenshtein.hpp"

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

namespace mapscreen::text {
namespace {

// Drops the common prefix and suffix; they never contribute edits.
void trim_common(std::u32string_view& a, std::u32string_view& b) {
  const auto prefix = static_cast<std::size_t>(
      std::mismatch(a.begin(), a.end(), b.begin(), b.end()).first - a.begin());
  a.remove_prefix(prefix);
  b.remove_prefix(prefix);
  const auto suffix = static_cast<std::size_t>(
      std::mismatch(a.rbegin(), a.rend(), b.rbegin(), b.rend()).first - a.rbegin());
  a.remove_suffix(suffix);
  b.remove_suffix(suffix);
}

}  // namespace

std::size_t levenshtein(std::u32string_view a, std::u32string_view b) {
  trim_common(a, b);
  if (a.size() > b.size()) std::swap(a, b);
  if (a.empty()) return b.size();

  // Single row over the shorter string; `diagonal` carries row[i-1][j-1].
  std::vector<std::size_t> row(a.size() + 1);
  std::iota(row.begin(), row.end(), std::size_t{0});
  for (std::size_t j = 1; j <= b.size(); ++j) {
    std::size_t diagonal = row[0];
    row[0] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
      const std::size_t above = row[i];
      const std::size_t substitute = diagonal + (a[i - 1] == b[j - 1] ? 0 : 1);
      row[i] = std::min({above + 1, row[i - 1] + 1, substitute});
      diagonal = above;
    }
  }
  return row[a.size()];
}

std::optional<std::size_t> levenshtein_bounded(std::u32string_view a, std::u32string_view b,
                                               std::size_t bound) {
  trim_common(a, b);
  if (a.size() > b.size()) std::swap(a, b);
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  if (m - n > bound) return std::nullopt;
  if (n == 0) return m;

  // Cells outside the diagonal band |i - j| <= bound always exceed the bound,
  // so they are pinned to `cap`.
  const std::size_t cap = bound + 1;
  std::vector<std::size_t> prev(m + 1, cap);
  std::vector<std::size_t> cur(m + 1, cap);
  for (std::size_t j = 0; j <= std::min(m, bound); ++j) prev[j] = j;

  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t lo = i > bound ? i - bound : 1;
    const std::size_t hi = std::min(m, i + bound);
    cur[lo - 1] = (lo == 1 && i <= bound) ? i : cap;
    std::size_t row_min = cur[lo - 1];
    for (std::size_t j = lo; j <= hi; ++j) {
      const std::size_t substitute = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      const std::size_t value = std::min({substitute, prev[j] + 1, cur[j - 1] + 1, cap});
      cur[j] = value;
      row_min = std::min(row_min, value);
    }
    if (hi < m) cur[hi + 1] = cap;
    if (row_min > bound) return std::nullopt;
    std::swap(prev, cur);
  }
  if (prev[m] > bound) return std::nullopt;
  return prev[m];
}

}  // namespace mapscreen::text
