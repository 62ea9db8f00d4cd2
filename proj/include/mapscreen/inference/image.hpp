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

#include <filesystem>
#include <optional>
#include <string>

#include <opencv2/core/mat.hpp>

namespace mapscreen::inference {

// An image to screen. Pixels are decoded on first access, so backends that
// work from cached predictions never touch the file.
class ImageInput {
 public:
  ImageInput(std::string image_id, std::filesystem::path path);
  static ImageInput from_raster(std::string image_id, cv::Mat raster);

  const std::string& id() const noexcept { return id_; }
  const std::filesystem::path& path() const noexcept { return path_; }

  // BGR, 8-bit, 3 channels. Throws DecodeError.
  const cv::Mat& pixels() const;
  bool decoded() const noexcept { return raster_.has_value(); }

 private:
  std::string id_;
  std::filesystem::path path_;
  mutable std::optional<cv::Mat> raster_;
};

}  // namespace mapscreen::inference
