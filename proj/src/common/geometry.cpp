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

#include "mapscreen/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace mapscreen {

double signed_area(const Quad& quad) {
  double twice = 0.0;
  for (std::size_t i = 0; i < quad.size(); ++i) {
    const Point& p = quad[i];
    const Point& q = quad[(i + 1) % quad.size()];
    twice += p.x * q.y - q.x * p.y;
  }
  return twice / 2.0;
}

bool is_degenerate(const Quad& quad, double min_area) {
  for (const Point& p : quad) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) return true;
  }
  return area(quad) <= min_area;
}

std::array<double, 8> flatten(const Quad& quad) {
  std::array<double, 8> flat{};
  for (std::size_t i = 0; i < quad.size(); ++i) {
    flat[2 * i] = quad[i].x;
    flat[2 * i + 1] = quad[i].y;
  }
  return flat;
}

Quad quad_from_flat(std::span<const double, 8> flat) {
  Quad quad;
  for (std::size_t i = 0; i < quad.size(); ++i) quad[i] = {flat[2 * i], flat[2 * i + 1]};
  return quad;
}

Quad clamp_to(const Quad& quad, int width, int height) {
  Quad out = quad;
  const double max_x = std::max(0, width - 1);
  const double max_y = std::max(0, height - 1);
  for (Point& p : out) {
    p.x = std::clamp(p.x, 0.0, max_x);
    p.y = std::clamp(p.y, 0.0, max_y);
  }
  return out;
}

}  // namespace mapscreen
