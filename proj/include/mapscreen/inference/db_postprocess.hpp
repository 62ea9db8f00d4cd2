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

#include <vector>

#include <opencv2/core/mat.hpp>

#include "mapscreen/inference/model_bundle.hpp"
#include "mapscreen/inference/types.hpp"

namespace mapscreen::inference {

// Turns a differentiable-binarization probability map (CV_32F, one channel,
// values in [0, 1]) into text quadrilaterals in original-image pixels:
// threshold, trace connected-component contours, fit a minimum-area box,
// drop low-scoring boxes, expand each box by area * unclip_ratio / perimeter,
// refit, then rescale and clamp to `original_size`.
std::vector<TextRegion> db_postprocess(const cv::Mat& probability, const DetectorSettings& settings,
                                       cv::Size original_size);

// Offset distance used to grow a shrunk text kernel back to full size.
double unclip_distance(double area, double perimeter, double unclip_ratio);

// Orders four points clockwise starting at the top-left one.
Quad order_quad(const std::array<Point, 4>& points);

}  // namespace mapscreen::inference
