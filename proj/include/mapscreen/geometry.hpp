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
#include <span>
#include <vector>

namespace mapscreen {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

// Four ordered vertices: top-left, top-right, bottom-right, bottom-left for
// axis-aligned boxes.
using Quad = std::array<Point, 4>;

// Shoelace area; positive for clockwise order in image coordinates (y down).
double signed_area(const Quad& quad);

inline double area(const Quad& quad) {
  const double a = signed_area(quad);
  return a < 0 ? -a : a;
}

bool is_degenerate(const Quad& quad, double min_area = 1e-9);

// Row-major flat layout: x0, y0, x1, y1, x2, y2, x3, y3.
std::array<double, 8> flatten(const Quad& quad);
Quad quad_from_flat(std::span<const double, 8> flat);

// Clamps every vertex into [0, width-1] x [0, height-1].
Quad clamp_to(const Quad& quad, int width, int height);

}  // namespace mapscreen
