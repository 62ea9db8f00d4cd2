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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "mapscreen/noise/corpus.hpp"
#include "mapscreen/noise/perturb.hpp"
#include "mapscreen/text/match.hpp"
#include "mapscreen/text/normalize.hpp"
#include "oracles.hpp"
#include "temp_dir.hpp"

namespace mapscreen::noise {
namespace {

using dataset::Category;

const std::vector<std::string> kSamples = {"Hoàng Sa", "Trường Sa", "Paracel", "Spratly", "Đà Nẵng",
                                           "Quần đảo Hoàng Sa", "Hue", "ab"};

std::size_t folded_distance(const std::string& a, const std::string& b) {
  return testing::levenshtein_oracle(text::normalize(a).value(), text::normalize(b).value());
}

TEST(EditOps, ParseAndValidate) {
  EXPECT_EQ(parse_edit_ops("insert,delete"), (std::vector<EditOp>{EditOp::Insert, EditOp::Delete}));
  EXPECT_EQ(parse_edit_ops(" substitute , diacritic "),
            (std::vector<EditOp>{EditOp::Substitute, EditOp::DiacriticPerturb}));
  for (const char* bad : {"", "insert,,delete", "swap", "insert,insert"}) {
    try {
      NoiseSpec spec;
      spec.ops = parse_edit_ops(bad);
      spec.validate();
      ADD_FAILURE() << bad;
    } catch (const ConfigError& e) {
      EXPECT_EQ(e.field(), "ops") << bad;
    }
  }
  for (EditOp op : kEditOps) EXPECT_EQ(parse_edit_op(to_string(op)), op);
}

TEST(Rng, DeterministicAndInRange) {
  Rng a(42);
  Rng b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next(), b.next());
  Rng r(1);
  std::vector<int> seen(7, 0);
  for (int i = 0; i < 7000; ++i) {
    const std::size_t v = r.uniform_index(7);
    ASSERT_LT(v, 7U);
    ++seen[v];
    const double u = r.uniform01();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
  for (int count : seen) EXPECT_GT(count, 800);
}

TEST(Perturb, ZeroEditsIsIdentity) {
  Rng rng(9);
  for (const std::string& s : kSamples) {
    const Perturbation p = perturb(s, NoiseSpec{0, {std::begin(kEditOps), std::end(kEditOps)}, 9}, rng);
    EXPECT_EQ(p.perturbed, s);
    EXPECT_EQ(p.distance, 0U);
    EXPECT_TRUE(p.applied.empty());
  }
}

TEST(Perturb, RealizedDistanceMatchesOracleAndStaysWithinK) {
  for (std::size_t k = 1; k <= 3; ++k) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      Rng rng(seed);
      NoiseSpec spec;
      spec.edits = k;
      spec.seed = seed;
      for (const std::string& s : kSamples) {
        const Perturbation p = perturb(s, spec, rng);
        EXPECT_EQ(p.original, s);
        const std::size_t d = folded_distance(s, p.perturbed);
        EXPECT_EQ(p.distance, d) << s << " -> " << p.perturbed;
        EXPECT_LE(d, k) << s << " -> " << p.perturbed;
        EXPECT_LE(p.applied.size(), k);
      }
    }
  }
}

TEST(Perturb, DiacriticEditsVanishAfterFolding) {
  NoiseSpec spec;
  spec.edits = 2;
  spec.ops = {EditOp::DiacriticPerturb};
  std::size_t changed = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    const Perturbation p = perturb("Trường Sa", spec, rng);
    EXPECT_EQ(p.distance, 0U);
    EXPECT_EQ(text::normalize(p.perturbed), text::normalize("truong sa"));
    if (p.perturbed != "Trường Sa") ++changed;
  }
  EXPECT_GT(changed, 0U);
}

TEST(Perturb, SingleSubstitutionMovesExactlyOne) {
  NoiseSpec spec;
  spec.edits = 1;
  spec.ops = {EditOp::Substitute};
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Rng rng(seed);
    EXPECT_EQ(perturb("Paracel", spec, rng).distance, 1U);
  }
}

TEST(Perturb, StandaloneFormIsDeterministic) {
  NoiseSpec spec;
  spec.edits = 2;
  spec.seed = 77;
  EXPECT_EQ(perturb_string("Hoàng Sa", spec), perturb_string("Hoàng Sa", spec));
  std::set<std::string> outputs;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    spec.seed = seed;
    outputs.insert(perturb_string("Hoàng Sa", spec));
  }
  EXPECT_GT(outputs.size(), 1U);
}

TEST(Apportion, LargestRemainder) {
  EXPECT_EQ(apportion(10, {1, 1, 1}), (std::vector<std::size_t>{4, 3, 3}));
  EXPECT_EQ(apportion(5, {0, 1}), (std::vector<std::size_t>{0, 5}));
  EXPECT_EQ(apportion(0, {0.3, 0.7}), (std::vector<std::size_t>{0, 0}));
  EXPECT_EQ(apportion(7, {0.5, 0.25, 0.25}), (std::vector<std::size_t>{3, 2, 2}));
  for (std::size_t total : {1U, 13U, 240U, 1001U}) {
    const auto parts = apportion(total, {0.1, 0.2, 0.3, 0.4});
    EXPECT_EQ(std::accumulate(parts.begin(), parts.end(), std::size_t{0}), total);
  }
}

TEST(Mix, ReferenceAndParsing) {
  const CategoryMix ref = reference_mix();
  EXPECT_NEAR(ref[0] + ref[1] + ref[2] + ref[3], 1.0, 1e-12);
  EXPECT_EQ(apportion(6858, {ref.begin(), ref.end()}), (std::vector<std::size_t>{2000, 2777, 1002, 1079}));
  EXPECT_EQ(parse_mix("0.25,0.25,0.25,0.25"), (CategoryMix{0.25, 0.25, 0.25, 0.25}));
  for (const char* bad : {"0.5,0.5", "0.5,0.5,0.5,0.5", "-0.1,0.5,0.3,0.3", "a,b,c,d", ""}) {
    try {
      parse_mix(bad);
      ADD_FAILURE() << bad;
    } catch (const ConfigError& e) {
      EXPECT_EQ(e.field(), "mix");
    }
  }
}

TEST(Distractors, KeepTheirDistanceFloor) {
  const std::vector<std::string> terms = text::MatchPolicy::default_terms();
  std::size_t previous = SIZE_MAX;
  for (std::size_t k = 0; k <= 3; ++k) {
    const std::size_t floor = std::max<std::size_t>(4, 2 * k + 2);
    for (dataset::Language language : dataset::kLanguages) {
      const auto names = distractor_names(language, k);
      EXPECT_FALSE(names.empty());
      for (const std::string& name : names) {
        for (const std::string& term : terms) {
          EXPECT_GE(folded_distance(name, term), floor) << name << " vs " << term;
        }
      }
    }
    const std::size_t count = distractor_names(dataset::Language::Mixed, k).size();
    EXPECT_LE(count, previous);
    previous = count;
  }
}

std::string save_bytes(const SyntheticCorpus& corpus) {
  testing::TempDir dir;
  corpus.save(dir.path());
  std::string all;
  for (const char* f : {"manifest.jsonl", "predictions/classify.jsonl", "predictions/detect.jsonl",
                        "predictions/recognize.jsonl", "perturbations.jsonl"}) {
    all += testing::read_file(dir / f);
  }
  return all;
}

TEST(Corpus, ReproducibleForFixedSeed) {
  NoiseSpec spec;
  spec.edits = 1;
  spec.seed = 5;
  const std::string first = save_bytes(generate_corpus(120, reference_mix(), spec));
  EXPECT_EQ(save_bytes(generate_corpus(120, reference_mix(), spec)), first);
  spec.seed = 6;
  EXPECT_NE(save_bytes(generate_corpus(120, reference_mix(), spec)), first);
}

TEST(Corpus, ShapeAndConsistency) {
  NoiseSpec spec;
  spec.edits = 1;
  spec.seed = 11;
  const SyntheticCorpus corpus = generate_corpus(240, reference_mix(), spec);
  ASSERT_EQ(corpus.entries.size(), 240U);

  std::array<std::size_t, 4> per_category{};
  std::set<std::string> ids;
  for (const auto& e : corpus.entries) {
    ++per_category[static_cast<std::size_t>(e.category)];
    EXPECT_TRUE(ids.insert(e.image_id).second);
    const auto* cls = corpus.cache.classification(e.image_id);
    ASSERT_NE(cls, nullptr) << e.image_id;
    EXPECT_EQ(cls->is_vietnam_map, dataset::is_vietnam_map(e.category));
    ASSERT_NE(corpus.cache.detection(e.image_id), nullptr);
    for (const auto& region : *corpus.cache.detection(e.image_id)) {
      EXPECT_NE(corpus.cache.recognition(e.image_id, region.polygon), nullptr);
    }
    EXPECT_EQ(e.boxes.empty(), e.category != Category::VietnamMapWithIslands);
  }
  const CategoryMix mix = reference_mix();
  const auto expected = apportion(240, {mix.begin(), mix.end()});
  for (std::size_t c = 0; c < 4; ++c) EXPECT_EQ(per_category[c], expected[c]);

  std::map<std::string, std::size_t> landmarks;
  for (const TextRecord& t : corpus.texts) {
    EXPECT_LE(t.perturbation.distance, 1U);
    if (t.is_landmark()) ++landmarks[t.image_id];
  }
  for (const auto& e : corpus.entries) {
    if (e.category == Category::VietnamMapWithIslands) {
      EXPECT_GE(landmarks[e.image_id], 1U);
    }
    if (e.category == Category::VietnamMapWithoutIslands) {
      EXPECT_EQ(landmarks.count(e.image_id), 0U);
    }
  }
}

TEST(Corpus, RejectsBadArguments) {
  NoiseSpec spec;
  auto field_of = [](auto&& fn) {
    try {
      fn();
    } catch (const ConfigError& e) {
      return e.field();
    }
    return std::string("none");
  };
  EXPECT_EQ(field_of([&] { generate_corpus(0, reference_mix(), spec); }), "size");
  EXPECT_EQ(field_of([&] { generate_corpus(10, CategoryMix{1, 1, 0, 0}, spec); }), "mix");
  spec.edits = 40;
  EXPECT_EQ(field_of([&] { generate_corpus(10, reference_mix(), spec); }), "edits");
}

}  // namespace
}  // namespace mapscreen::noise
