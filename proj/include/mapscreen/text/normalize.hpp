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

#include <compare>
#include <string>
#include <string_view>

namespace mapscreen::text {

// Text after canonical composition, lowercasing, diacritic folding and
// whitespace collapsing. Only `normalize` can produce one, so holding a
// NormalizedText means the value is already in normal form.
class NormalizedText {
 public:
  NormalizedText() = default;

  const std::u32string& value() const noexcept { return value_; }
  std::string utf8() const;
  bool empty() const noexcept { return value_.empty(); }
  std::size_t size() const noexcept { return value_.size(); }

  friend bool operator==(const NormalizedText&, const NormalizedText&) = default;
  friend auto operator<=>(const NormalizedText&, const NormalizedText&) = default;

 private:
  explicit NormalizedText(std::u32string value) : value_(std::move(value)) {}
  friend NormalizedText normalize(std::string_view);

  std::u32string value_;
};

// NFC, lowercase, strip all combining marks (after NFD) and map U+0111 to 'd',
// NFC again, collapse whitespace runs to one space and trim. Invalid UTF-8
// sequences become U+FFFD.
NormalizedText normalize(std::string_view utf8);

std::u32string to_utf32(std::string_view utf8);
std::string to_utf8(std::u32string_view text);

}  // namespace mapscreen::text
