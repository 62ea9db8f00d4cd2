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

#include "mapscreen/noise/perturb.hpp"

#include <algorithm>
#include <limits>

#include "mapscreen/error.hpp"
#include "mapscreen/text/levenshtein.hpp"
#include "mapscreen/text/normalize.hpp"

namespace mapscreen::noise {
namespace {

// Accent variants sharing one folded base letter.
constexpr std::u32string_view kVariantGroups[] = {
    U"aàáảãạăằắẳẵặâầấẩẫậ", U"AÀÁẢÃẠĂẰẮẲẴẶÂẦẤẨẪẬ", U"eèéẻẽẹêềếểễệ", U"EÈÉẺẼẸÊỀẾỂỄỆ",
    U"iìíỉĩị",              U"IÌÍỈĨỊ",              U"oòóỏõọôồốổỗộơờớởỡợ", U"OÒÓỎÕỌÔỒỐỔỖỘƠỜỚỞỠỢ",
    U"uùúủũụưừứửữự",        U"UÙÚỦŨỤƯỪỨỬỮỰ",        U"yỳýỷỹỵ",              U"YỲÝỶỸỴ",
    U"dđ",                  U"DĐ",
};

constexpr int kAttempts = 16;

const std::u32string_view* variant_group(char32_t c) {
  for (const std::u32string_view& group : kVariantGroups) {
    if (group.find(c) != std::u32string_view::npos) return &group;
  }
  return nullptr;
}

char32_t random_letter(Rng& rng) { return U'a' + static_cast<char32_t>(rng.uniform_index(26)); }

std::optional<std::u32string> apply(EditOp op, const std::u32string& s, Rng& rng) {
  switch (op) {
    case EditOp::Insert: {
      std::u32string out = s;
      out.insert(out.begin() + static_cast<std::ptrdiff_t>(rng.uniform_index(s.size() + 1)),
                 random_letter(rng));
      return out;
    }
    case EditOp::Delete: {
      if (s.empty()) return std::nullopt;
      std::u32string out = s;
      out.erase(out.begin() + static_cast<std::ptrdiff_t>(rng.uniform_index(s.size())));
      return out;
    }
    case EditOp::Substitute: {
      std::vector<std::size_t> sites;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (!text::normalize(text::to_utf8(s.substr(i, 1))).empty()) sites.push_back(i);
      }
      if (sites.empty()) return std::nullopt;
      const std::size_t at = rng.pick(sites);
      const text::NormalizedText folded = text::normalize(text::to_utf8(s.substr(at, 1)));
      std::vector<char32_t> letters;
      for (char32_t c = U'a'; c <= U'z'; ++c) {
        if (folded.value() != std::u32string(1, c)) letters.push_back(c);
      }
      std::u32string out = s;
      out[at] = rng.pick(letters);
      return out;
    }
    case EditOp::DiacriticPerturb: {
      std::vector<std::size_t> sites;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (variant_group(s[i]) != nullptr) sites.push_back(i);
      }
      if (sites.empty()) return std::nullopt;
      const std::size_t at = rng.pick(sites);
      const std::u32string_view group = *variant_group(s[at]);
      std::vector<char32_t> others;
      for (char32_t c : group) {
        if (c != s[at]) others.push_back(c);
      }
      std::u32string out = s;
      out[at] = rng.pick(others);
      return out;
    }
  }
  return std::nullopt;
}

}  // namespace

std::string_view to_string(EditOp op) {
  switch (op) {
    case EditOp::Insert: return "insert";
    case EditOp::Delete: return "delete";
    case EditOp::Substitute: return "substitute";
    case EditOp::DiacriticPerturb: return "diacritic";
  }
  return "";
}

std::optional<EditOp> parse_edit_op(std::string_view token) {
  for (EditOp op : kEditOps) {
    if (to_string(op) == token) return op;
  }
  return std::nullopt;
}

void NoiseSpec::validate() const {
  if (ops.empty()) throw ConfigError("ops", "at least one edit operation is required");
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (std::find(ops.begin() + static_cast<std::ptrdiff_t>(i) + 1, ops.end(), ops[i]) != ops.end()) {
      throw ConfigError("ops", "duplicate operation '" + std::string(to_string(ops[i])) + "'");
    }
  }
}

std::vector<EditOp> parse_edit_ops(std::string_view csv) {
  std::vector<EditOp> ops;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const std::size_t comma = std::min(csv.find(',', start), csv.size());
    std::string_view token = csv.substr(start, comma - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    const auto op = parse_edit_op(token);
    if (!op) {
      throw ConfigError("ops", "unknown operation '" + std::string(token) +
                                   "' (expected insert, delete, substitute or diacritic)");
    }
    ops.push_back(*op);
    start = comma + 1;
  }
  NoiseSpec{0, ops, 0}.validate();
  return ops;
}

std::size_t Rng::uniform_index(std::size_t n) {
  const std::uint64_t bound = n;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return static_cast<std::size_t>(x % bound);
}

double Rng::uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

Perturbation perturb(std::string_view text, const NoiseSpec& spec, Rng& rng) {
  spec.validate();
  Perturbation result;
  result.original = std::string(text);
  std::u32string current = text::to_utf32(text);

  for (std::size_t edit = 0; edit < spec.edits; ++edit) {
    const EditOp op = rng.pick(spec.ops);
    const text::NormalizedText before = text::normalize(text::to_utf8(current));
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
      const auto candidate = apply(op, current, rng);
      if (!candidate) break;
      // Edits next to spaces can collapse or trim whitespace; redraw those.
      const std::size_t moved =
          text::levenshtein(text::normalize(text::to_utf8(*candidate)), before);
      if (moved > 1) continue;
      if (*candidate != current) {
        current = *candidate;
        result.applied.push_back(op);
      }
      break;
    }
  }

  result.perturbed = text::to_utf8(current);
  result.distance = text::levenshtein(text::normalize(result.perturbed), text::normalize(result.original));
  return result;
}

std::string perturb_string(std::string_view text, const NoiseSpec& spec) {
  Rng rng(spec.seed);
  return perturb(text, spec, rng).perturbed;
}

}  // namespace mapscreen::noise
