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

#include <sstream>

#include "mapscreen/error.hpp"
#include "mapscreen/inference/cached_backend.hpp"
#include "mapscreen/inference/mock_backend.hpp"
#include "mapscreen/inference/prediction_cache.hpp"
#include "temp_dir.hpp"

namespace mapscreen::inference {
namespace {

using testing::TempDir;
using testing::write_file;

const Quad kA = {Point{0, 0}, Point{40, 0}, Point{40, 10}, Point{0, 10}};
const Quad kB = {Point{0, 20}, Point{40, 20}, Point{40, 30}, Point{0, 30}};

ImageInput blank(const std::string& id) { return ImageInput(id, "/nonexistent/" + id + ".png"); }

TEST(BackendKind, Tokens) {
  EXPECT_EQ(parse_backend_kind("mock"), BackendKind::Mock);
  EXPECT_EQ(parse_backend_kind("cached"), BackendKind::Cached);
  EXPECT_EQ(parse_backend_kind("model"), BackendKind::ModelFile);
  EXPECT_EQ(parse_backend_kind("model-file"), BackendKind::ModelFile);
  EXPECT_EQ(parse_backend_kind("onnx"), std::nullopt);
  EXPECT_EQ(to_string(BackendKind::ModelFile), "model");
}

TEST(MockClassifier, KeysAndOverrides) {
  MockClassifier vn;
  EXPECT_EQ(vn.classify(blank("a")), (MapClassOutput{true, 1.0}));
  MockClassifier mixed(MockClassifier::kVietnamMap, {{"b", MockClassifier::kNotMap}});
  EXPECT_EQ(mixed.classify(blank("b")), (MapClassOutput{false, 0.0}));
  EXPECT_EQ(mixed.classify(blank("c")).is_vietnam_map, true);
  EXPECT_EQ(mixed.calls(), 2U);
  EXPECT_THROW(MockClassifier("maybe"), ConfigError);
  EXPECT_TRUE(vn.descriptor().shareable);
  EXPECT_EQ(vn.descriptor().kind, BackendKind::Mock);
}

TEST(MockDetector, SortsByScoreStably) {
  MockDetector det({{kA, 0.5}, {kB, 0.9}, {kA, 0.5}});
  const auto regions = det.detect(blank("x"));
  ASSERT_EQ(regions.size(), 3U);
  EXPECT_DOUBLE_EQ(regions[0].score, 0.9);
  EXPECT_EQ(regions[1].polygon, kA);
  EXPECT_EQ(det.calls(), 1U);
}

TEST(MockDetector, StackedRegionsAreDistinct) {
  const auto regions = MockDetector::stacked_regions(4);
  ASSERT_EQ(regions.size(), 4U);
  for (std::size_t i = 0; i < regions.size(); ++i) {
    EXPECT_FALSE(is_degenerate(regions[i].polygon));
    for (std::size_t j = 0; j < i; ++j) EXPECT_NE(regions[i].polygon, regions[j].polygon);
  }
}

TEST(MockRecognizer, LooksUpByPolygon) {
  MockRecognizer rec({{kA, "Hoàng Sa"}});
  EXPECT_EQ(rec.recognize(blank("x"), {kA, 1.0}).text, "Hoàng Sa");
  const auto unknown = rec.recognize(blank("x"), {kB, 1.0});
  EXPECT_TRUE(unknown.text.empty());
  EXPECT_DOUBLE_EQ(unknown.confidence, 0.0);
  const Quad flat = {Point{0, 0}, Point{1, 0}, Point{2, 0}, Point{3, 0}};
  EXPECT_THROW(rec.recognize(blank("x"), {flat, 1.0}), InvalidRegionError);
}

// Backend that breaks the score contract.
class BadClassifier final : public MapClassifier {
 public:
  BackendDescriptor descriptor() const override { return {BackendKind::Mock, "bad", true}; }

 protected:
  MapClassOutput do_classify(const ImageInput&) override { return {true, 1.5}; }
};

class BadDetector final : public TextDetector {
 public:
  BackendDescriptor descriptor() const override { return {BackendKind::Mock, "bad", true}; }

 protected:
  std::vector<TextRegion> do_detect(const ImageInput&) override { return {{kA, -0.1}}; }
};

TEST(BackendContract, OutOfRangeScoresAreBackendErrors) {
  BadClassifier cls;
  try {
    cls.classify(blank("x"));
    FAIL();
  } catch (const BackendError& e) {
    EXPECT_EQ(e.stage(), "classify");
  }
  BadDetector det;
  try {
    det.detect(blank("x"));
    FAIL();
  } catch (const BackendError& e) {
    EXPECT_EQ(e.stage(), "detect");
  }
}

PredictionCache sample_cache() {
  PredictionCache cache;
  cache.add_classification("m1", {true, 0.8});
  cache.add_classification("m2", {false, 0.3});
  cache.add_detection("m1", {{kA, 0.9}, {kB, 0.7}});
  cache.add_detection("m2", {});
  cache.add_recognition("m1", {{kA, 0.9}, "Trường Sa", 0.95});
  cache.add_recognition("m1", {{kB, 0.7}, "Đà Nẵng", 0.5});
  return cache;
}

TEST(PredictionCache, WriteReadRoundTrip) {
  const PredictionCache cache = sample_cache();
  std::ostringstream c, d, r;
  cache.write(c, d, r);
  std::istringstream ci(c.str()), di(d.str()), ri(r.str());
  const PredictionCache back = PredictionCache::read(&ci, &di, &ri);
  EXPECT_EQ(back.classified_ids(), cache.classified_ids());
  EXPECT_EQ(*back.classification("m1"), *cache.classification("m1"));
  EXPECT_EQ(*back.detection("m1"), *cache.detection("m1"));
  EXPECT_EQ(back.recognition("m1", kB)->text, "Đà Nẵng");
  EXPECT_EQ(back.recognition_count(), 2U);

  std::ostringstream c2, d2, r2;
  back.write(c2, d2, r2);
  EXPECT_EQ(c2.str(), c.str());
  EXPECT_EQ(d2.str(), d.str());
  EXPECT_EQ(r2.str(), r.str());
}

TEST(PredictionCache, SaveLoadAndMissingFiles) {
  TempDir dir;
  sample_cache().save(dir.path());
  const PredictionCache loaded = PredictionCache::load(dir.path());
  EXPECT_EQ(loaded.classified_ids().size(), 2U);

  TempDir partial;
  write_file(partial / PredictionCache::kClassifyFile,
             "{\"image_id\":\"z\",\"is_vietnam_map\":true,\"score\":0.7}\n");
  const PredictionCache only = PredictionCache::load(partial.path());
  EXPECT_EQ(only.classified_ids().size(), 1U);
  EXPECT_EQ(only.detection("z"), nullptr);

  EXPECT_THROW(PredictionCache::load(dir / "absent"), Error);
}

TEST(PredictionCache, MalformedLinesNameFileAndLine) {
  std::istringstream bad("{\"image_id\":\"a\",\"is_vietnam_map\":true,\"score\":0.5}\n{\"image_id\":\"b\"}\n");
  try {
    PredictionCache::read(&bad, nullptr, nullptr);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("classify.jsonl:2"), std::string::npos) << e.what();
  }
  std::istringstream poly("{\"image_id\":\"a\",\"regions\":[{\"polygon\":[1,2,3,4,5,6],\"score\":1}]}\n");
  EXPECT_THROW(PredictionCache::read(nullptr, &poly, nullptr), Error);
}

TEST(CachedBackends, ReplayAndThreshold) {
  auto cache = std::make_shared<const PredictionCache>(sample_cache());
  CachedClassifier strict(cache, 0.9);
  EXPECT_FALSE(strict.classify(blank("m1")).is_vietnam_map);
  CachedClassifier normal(cache, 0.5);
  EXPECT_EQ(normal.classify(blank("m1")), (MapClassOutput{true, 0.8}));
  EXPECT_FALSE(normal.classify(blank("m2")).is_vietnam_map);

  try {
    normal.classify(blank("zz"));
    FAIL();
  } catch (const BackendError& e) {
    EXPECT_EQ(e.stage(), "classify");
  }

  CachedDetector det(cache);
  EXPECT_EQ(det.detect(blank("m1")).size(), 2U);
  EXPECT_TRUE(det.detect(blank("m2")).empty());
  try {
    det.detect(blank("zz"));
    FAIL();
  } catch (const BackendError& e) {
    EXPECT_EQ(e.stage(), "detect");
  }

  CachedRecognizer rec(cache);
  EXPECT_EQ(rec.recognize(blank("m1"), {kA, 0.9}).text, "Trường Sa");
  EXPECT_TRUE(rec.recognize(blank("m2"), {kA, 0.9}).text.empty());
  EXPECT_TRUE(strict.descriptor().shareable);
  EXPECT_EQ(det.descriptor().kind, BackendKind::Cached);
}

TEST(CachedBackends, NeverDecodePixels) {
  auto cache = std::make_shared<const PredictionCache>(sample_cache());
  const ImageInput image = blank("m1");
  CachedClassifier(cache, 0.5).classify(image);
  CachedDetector(cache).detect(image);
  EXPECT_FALSE(image.decoded());
}

}  // namespace
}  // namespace mapscreen::inference
