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

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace mapscreen::noise {

// OCR-style string edits. DiacriticPerturb swaps a Vietnamese vowel (or d/đ)
// for another accent variant of the same base letter, so it disappears after
// folding.
enum class EditOp { Insert, Delete, Substitute, DiacriticPerturb };

inline constexpr EditOp kEditOps[] = {EditOp::Insert, EditOp::Delete, EditOp::Substitute,
                                      EditOp::DiacriticPerturb};

std::string_view to_string(EditOp op);                     // insert | delete | substitute | diacritic
std::optional<EditOp> parse_edit_op(std::string_view token);

struct NoiseSpec {
  std::size_t edits = 0;  // k
  std::vector<EditOp> ops{std::begin(kEditOps), std::end(kEditOps)};
  std::uint64_t seed = 0;

  // Throws ConfigError("ops") for an empty or duplicated operation set.
  void validate() const;
};

// Parses "insert,delete,..." into an operation list. Throws ConfigError("ops").
std::vector<EditOp> parse_edit_ops(std::string_view csv);

// Seeded generator with platform-independent draws; the standard
// distributions are implementation-defined, so they are not used.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  std::size_t uniform_index(std::size_t n);  // [0, n), n > 0
  double uniform01();                        // [0, 1), 53 bits
  bool chance(double p) { return uniform01() < p; }

  template <typename T>
  const T& pick(const std::vector<T>& items) {
    return items[uniform_index(items.size())];
  }

 private:
  std::mt19937_64 engine_;
};

struct Perturbation {
  std::string original;
  std::string perturbed;
  std::vector<EditOp> applied;  // operations that changed the string
  std::size_t distance = 0;     // realized, between the normalized forms
};

// Applies `spec.edits` operations drawn from `spec.ops`. Each one moves the
// normalized string by at most one edit, so the realized distance never
// exceeds k. An operation with no valid site in the string is skipped.
Perturbation perturb(std::string_view text, const NoiseSpec& spec, Rng& rng);

// Stand-alone form seeded from `spec.seed`.
std::string perturb_string(std::string_view text, const NoiseSpec& spec);

}  // namespace mapscreen::noise
