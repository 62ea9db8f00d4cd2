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

#include "mapscreen/inference/db_postprocess.hpp"

#include <algorithm>
#include <cmath>

#include <opencv2/imgproc.hpp>

namespace mapscreen::inference {
namespace {

constexpr float kMinSide = 3.0F;

std::array<Point, 4> corners(const cv::RotatedRect& box) {
  std::array<cv::Point2f, 4> pts;
  box.points(pts.data());
  std::array<Point, 4> out;
  for (std::size_t i = 0; i < 4; ++i) out[i] = {pts[i].x, pts[i].y};
  return out;
}

// Mean probability inside the box polygon.
double box_score(const cv::Mat& probability, const Quad& quad) {
  double min_x = quad[0].x, max_x = quad[0].x, min_y = quad[0].y, max_y = quad[0].y;
  for (const Point& p : quad) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const int x0 = std::clamp(static_cast<int>(std::floor(min_x)), 0, probability.cols - 1);
  const int x1 = std::clamp(static_cast<int>(std::ceil(max_x)), 0, probability.cols - 1);
  const int y0 = std::clamp(static_cast<int>(std::floor(min_y)), 0, probability.rows - 1);
  const int y1 = std::clamp(static_cast<int>(std::ceil(max_y)), 0, probability.rows - 1);

  cv::Mat mask = cv::Mat::zeros(y1 - y0 + 1, x1 - x0 + 1, CV_8UC1);
  std::vector<cv::Point> polygon;
  for (const Point& p : quad) {
    polygon.emplace_back(static_cast<int>(std::lround(p.x)) - x0,
                         static_cast<int>(std::lround(p.y)) - y0);
  }
  cv::fillPoly(mask, std::vector<std::vector<cv::Point>>{polygon}, cv::Scalar(1));
  const cv::Mat roi = probability(cv::Rect(x0, y0, x1 - x0 + 1, y1 - y0 + 1));
  return cv::mean(roi, mask)[0];
}

}  // namespace

double unclip_distance(double area, double perimeter, double unclip_ratio) {
  if (perimeter <= 0.0) return 0.0;
  return area * unclip_ratio / perimeter;
}

Quad order_quad(const std::array<Point, 4>& points) {
  std::array<Point, 4> p = points;
  std::sort(p.begin(), p.end(), [](const Point& a, const Point& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  const auto [top_left, bottom_left] = p[0].y <= p[1].y ? std::pair{p[0], p[1]} : std::pair{p[1], p[0]};
  const auto [top_right, bottom_right] = p[2].y <= p[3].y ? std::pair{p[2], p[3]} : std::pair{p[3], p[2]};
  return {top_left, top_right, bottom_right, bottom_left};
}

std::vector<TextRegion> db_postprocess(const cv::Mat& probability, const DetectorSettings& settings,
                                       cv::Size original_size) {
  CV_Assert(probability.type() == CV_32FC1);
  std::vector<TextRegion> regions;
  if (probability.empty()) return regions;

  cv::Mat bitmap = probability > settings.binarize_threshold;
  std::vector<std::vector<cv::Point>> contours;
  cv::findContours(bitmap, contours, cv::RETR_LIST, cv::CHAIN_APPROX_SIMPLE);

  const double scale_x = static_cast<double>(original_size.width) / probability.cols;
  const double scale_y = static_cast<double>(original_size.height) / probability.rows;
  const std::size_t limit =
      std::min(contours.size(), static_cast<std::size_t>(std::max(0, settings.max_candidates)));

  for (std::size_t c = 0; c < limit; ++c) {
    const cv::RotatedRect kernel = cv::minAreaRect(contours[c]);
    if (std::min(kernel.size.width, kernel.size.height) < kMinSide) continue;

    const Quad kernel_quad = order_quad(corners(kernel));
    const double score = box_score(probability, kernel_quad);
    if (score < settings.box_threshold) continue;

    // For a rectangle, offsetting every edge outward by d and refitting the
    // minimum-area box adds 2d to both sides.
    const double w = kernel.size.width;
    const double h = kernel.size.height;
    const double d = unclip_distance(w * h, 2.0 * (w + h), settings.unclip_ratio);
    const cv::RotatedRect grown(kernel.center,
                                cv::Size2f(static_cast<float>(w + 2.0 * d),
                                           static_cast<float>(h + 2.0 * d)),
                                kernel.angle);
    if (std::min(grown.size.width, grown.size.height) < kMinSide + 2.0F) continue;

    std::array<Point, 4> pts = corners(grown);
    for (Point& p : pts) {
      p.x *= scale_x;
      p.y *= scale_y;
    }
    const Quad quad = clamp_to(order_quad(pts), original_size.width, original_size.height);
    if (is_degenerate(quad)) continue;
    regions.push_back({quad, std::clamp(score, 0.0, 1.0)});
  }

  std::stable_sort(regions.begin(), regions.end(),
                   [](const TextRegion& a, const TextRegion& b) { return a.score > b.score; });
  return regions;
}

}  // namespace mapscreen::inference
