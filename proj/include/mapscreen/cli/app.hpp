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

#include <iosfwd>

namespace mapscreen::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;    // bad flags, config or arguments
inline constexpr int kExitRuntime = 2;  // I/O, input data or backend failure

// The mapscreen command line: screen, evaluate, sweep, stats, gen-corpus.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mapscreen::cli
