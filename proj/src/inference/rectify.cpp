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

#include "mapscreen/inference/rectify.hpp"

#include <algorithm>
#include <cmath>

#include <opencv2/core.hpp>
#include <opencv2/imgproc.hpp>

#include "mapscreen/inference/types.hpp"

namespace mapscreen::inference {
namespace {

double distance(const Point& a, const Point& b) { return std::hypot(a.x - b.x, a.y - b.y); }

}  // namespace

cv::Mat rectify_crop(const cv::Mat& image, const Quad& quad) {
  if (is_degenerate(quad)) throw InvalidRegionError("cannot rectify a zero-area quadrilateral");

  const int width = std::max(
      1, static_cast<int>(std::lround(std::max(distance(quad[0], quad[1]), distance(quad[2], quad[3])))));
  const int height = std::max(
      1, static_cast<int>(std::lround(std::max(distance(quad[0], quad[3]), distance(quad[1], quad[2])))));

  std::array<cv::Point2f, 4> src;
  for (std::size_t i = 0; i < 4; ++i) {
    src[i] = {static_cast<float>(quad[i].x), static_cast<float>(quad[i].y)};
  }
  const std::array<cv::Point2f, 4> dst{cv::Point2f(0, 0), cv::Point2f(static_cast<float>(width), 0),
                                       cv::Point2f(static_cast<float>(width), static_cast<float>(height)),
                                       cv::Point2f(0, static_cast<float>(height))};
  const cv::Mat transform = cv::getPerspectiveTransform(src.data(), dst.data());
  cv::Mat crop;
  cv::warpPerspective(image, crop, transform, cv::Size(width, height), cv::INTER_CUBIC,
                      cv::BORDER_REPLICATE);
  if (crop.rows >= 1.5 * crop.cols) cv::rotate(crop, crop, cv::ROTATE_90_COUNTERCLOCKWISE);
  return crop;
}

}  // namespace mapscreen::inference
