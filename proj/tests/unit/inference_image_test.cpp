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

#include <opencv2/imgcodecs.hpp>
#include <opencv2/imgproc.hpp>

#include "mapscreen/inference/db_postprocess.hpp"
#include "mapscreen/inference/image.hpp"
#include "mapscreen/inference/rectify.hpp"
#include "temp_dir.hpp"

namespace mapscreen::inference {
namespace {

using testing::TempDir;
using testing::write_file;

TEST(ImageInput, DecodesLazily) {
  TempDir dir;
  cv::Mat gray(20, 30, CV_8UC1, cv::Scalar(7));
  ASSERT_TRUE(cv::imwrite((dir / "g.png").string(), gray));
  const ImageInput image("g", dir / "g.png");
  EXPECT_FALSE(image.decoded());
  const cv::Mat& px = image.pixels();
  EXPECT_TRUE(image.decoded());
  EXPECT_EQ(px.type(), CV_8UC3);
  EXPECT_EQ(px.cols, 30);
  EXPECT_EQ(px.rows, 20);
}

TEST(ImageInput, DecodeFailures) {
  TempDir dir;
  write_file(dir / "junk.png", "not an image");
  EXPECT_THROW(ImageInput("j", dir / "junk.png").pixels(), DecodeError);
  EXPECT_THROW(ImageInput("m", dir / "missing.png").pixels(), DecodeError);
  EXPECT_THROW(ImageInput::from_raster("e", cv::Mat()).pixels(), DecodeError);
}

TEST(ImageInput, FromRasterConvertsToBgr) {
  const ImageInput image = ImageInput::from_raster("r", cv::Mat(4, 5, CV_8UC4, cv::Scalar(1, 2, 3, 4)));
  EXPECT_EQ(image.pixels().type(), CV_8UC3);
  EXPECT_EQ(image.pixels().at<cv::Vec3b>(0, 0), cv::Vec3b(1, 2, 3));
}

TEST(DbPostprocess, UnclipDistanceAndOrdering) {
  EXPECT_DOUBLE_EQ(unclip_distance(100.0, 40.0, 1.5), 3.75);
  EXPECT_DOUBLE_EQ(unclip_distance(100.0, 0.0, 1.5), 0.0);
  const Quad q = order_quad({Point{9, 9}, Point{0, 0}, Point{0, 9}, Point{9, 0}});
  EXPECT_EQ(q[0], (Point{0, 0}));
  EXPECT_EQ(q[1], (Point{9, 0}));
  EXPECT_EQ(q[2], (Point{9, 9}));
  EXPECT_EQ(q[3], (Point{0, 9}));
}

cv::Mat probability_with(const std::vector<std::pair<cv::Rect, float>>& blobs, cv::Size size) {
  cv::Mat prob = cv::Mat::zeros(size, CV_32FC1);
  for (const auto& [rect, value] : blobs) prob(rect).setTo(value);
  return prob;
}

TEST(DbPostprocess, FindsAndGrowsTextBoxes) {
  const cv::Mat prob = probability_with({{cv::Rect(20, 30, 60, 10), 0.9F}, {cv::Rect(20, 70, 30, 8), 0.8F}},
                                        cv::Size(128, 96));
  DetectorSettings settings;
  const auto regions = db_postprocess(prob, settings, prob.size());
  ASSERT_EQ(regions.size(), 2U);
  EXPECT_NEAR(regions[0].score, 0.9, 1e-3);
  EXPECT_NEAR(regions[1].score, 0.8, 1e-3);
  // The kernel spans x 20..79, y 30..39; the grown box must contain it.
  const Quad& q = regions[0].polygon;
  EXPECT_LT(q[0].x, 20);
  EXPECT_LT(q[0].y, 30);
  EXPECT_GT(q[2].x, 79);
  EXPECT_GT(q[2].y, 39);
  // Grown by 2d on each side, d = w*h*ratio / (2(w+h)).
  const double w = 59, h = 9;
  const double d = w * h * 1.5 / (2 * (w + h));
  EXPECT_NEAR(q[1].x - q[0].x, w + 2 * d, 1.0);
  EXPECT_NEAR(q[3].y - q[0].y, h + 2 * d, 1.0);
}

TEST(DbPostprocess, DropsWeakAndTinyBlobs) {
  DetectorSettings settings;
  const cv::Mat weak = probability_with({{cv::Rect(10, 10, 40, 10), 0.4F}}, cv::Size(64, 64));
  EXPECT_TRUE(db_postprocess(weak, settings, weak.size()).empty());
  const cv::Mat tiny = probability_with({{cv::Rect(10, 10, 2, 2), 1.0F}}, cv::Size(64, 64));
  EXPECT_TRUE(db_postprocess(tiny, settings, tiny.size()).empty());
  EXPECT_TRUE(db_postprocess(cv::Mat::zeros(32, 32, CV_32FC1), settings, {32, 32}).empty());
}

TEST(DbPostprocess, RescalesToOriginalSize) {
  const cv::Mat prob = probability_with({{cv::Rect(8, 8, 16, 8), 1.0F}}, cv::Size(32, 32));
  DetectorSettings settings;
  settings.unclip_ratio = 0.0;
  const auto regions = db_postprocess(prob, settings, cv::Size(64, 128));
  ASSERT_EQ(regions.size(), 1U);
  const Quad& q = regions[0].polygon;
  EXPECT_NEAR(q[0].x, 16, 2.0);
  EXPECT_NEAR(q[0].y, 32, 4.0);
  EXPECT_NEAR(q[2].x, 46, 2.0);
  EXPECT_NEAR(q[2].y, 60, 4.0);
}

TEST(Rectify, AxisAlignedCrop) {
  cv::Mat image(60, 100, CV_8UC3, cv::Scalar(0, 0, 0));
  image(cv::Rect(10, 20, 40, 10)).setTo(cv::Scalar(255, 255, 255));
  const Quad q = {Point{10, 20}, Point{50, 20}, Point{50, 30}, Point{10, 30}};
  const cv::Mat crop = rectify_crop(image, q);
  EXPECT_EQ(crop.cols, 40);
  EXPECT_EQ(crop.rows, 10);
  EXPECT_GT(cv::mean(crop)[0], 200.0);
}

TEST(Rectify, TallCropsAreRotated) {
  cv::Mat image(100, 100, CV_8UC3, cv::Scalar(0, 0, 0));
  const Quad q = {Point{10, 10}, Point{20, 10}, Point{20, 80}, Point{10, 80}};
  const cv::Mat crop = rectify_crop(image, q);
  EXPECT_EQ(crop.cols, 70);
  EXPECT_EQ(crop.rows, 10);
}

TEST(Rectify, DegenerateQuadThrows) {
  cv::Mat image(10, 10, CV_8UC3);
  const Quad q = {Point{1, 1}, Point{5, 1}, Point{9, 1}, Point{2, 1}};
  EXPECT_THROW(rectify_crop(image, q), InvalidRegionError);
}

}  // namespace
}  // namespace mapscreen::inference
