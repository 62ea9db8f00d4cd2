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

#include <cstddef>
#include <functional>

namespace mapscreen::pipeline {

// Runs fn(worker, index) for every index in [0, count) on `workers` threads.
// `setup(worker)` runs once on each thread before it takes work and returns
// the per-thread body. The first exception escaping a body is rethrown after
// all threads join.
void parallel_for(std::size_t count, std::size_t workers,
                  const std::function<std::function<void(std::size_t)>(std::size_t)>& setup);

}  // namespace mapscreen::pipeline
