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

#include "mapscreen/inference/image.hpp"

#include <opencv2/imgcodecs.hpp>
#include <opencv2/imgproc.hpp>

#include "mapscreen/inference/types.hpp"

namespace mapscreen::inference {
namespace {

cv::Mat to_bgr8(const cv::Mat& raster) {
  cv::Mat out;
  switch (raster.channels()) {
    case 1: cv::cvtColor(raster, out, cv::COLOR_GRAY2BGR); break;
    case 4: cv::cvtColor(raster, out, cv::COLOR_BGRA2BGR); break;
    default: out = raster;
  }
  if (out.depth() != CV_8U) {
    cv::Mat converted;
    out.convertTo(converted, CV_8U);
    out = converted;
  }
  return out;
}

}  // namespace

ImageInput::ImageInput(std::string image_id, std::filesystem::path path)
    : id_(std::move(image_id)), path_(std::move(path)) {}

ImageInput ImageInput::from_raster(std::string image_id, cv::Mat raster) {
  ImageInput image(std::move(image_id), {});
  if (raster.empty() || raster.rows == 0 || raster.cols == 0) {
    throw DecodeError("image '" + image.id_ + "' has zero area");
  }
  image.raster_ = to_bgr8(raster);
  return image;
}

const cv::Mat& ImageInput::pixels() const {
  if (raster_) return *raster_;
  if (path_.empty()) throw DecodeError("image '" + id_ + "' has no path");
  cv::Mat raster;
  try {
    raster = cv::imread(path_.string(), cv::IMREAD_COLOR);
  } catch (const cv::Exception& e) {
    throw DecodeError("cannot decode '" + path_.string() + "': " + e.what());
  }
  if (raster.empty()) throw DecodeError("cannot decode '" + path_.string() + "'");
  if (raster.rows == 0 || raster.cols == 0) {
    throw DecodeError("image '" + path_.string() + "' has zero area");
  }
  raster_ = to_bgr8(raster);
  return *raster_;
}

}  // namespace mapscreen::inference
