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

#include <opencv2/core/mat.hpp>

#include "mapscreen/geometry.hpp"

namespace mapscreen::inference {

// Perspective-warps the quadrilateral to an axis-aligned patch whose width and
// height are the longer of the opposing edge lengths. Patches much taller than
// wide are rotated to read horizontally. Throws InvalidRegionError for
// degenerate quads.
cv::Mat rectify_crop(const cv::Mat& image, const Quad& quad);

}  // namespace mapscreen::inference
