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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mapscreen/pipeline/screen.hpp"

namespace mapscreen::pipeline {

// JSON-lines verdict report: one verdict object per line, then a final line
// {"type": "summary", ...}.
nlohmann::ordered_json verdict_to_json(const Verdict& verdict);
Verdict verdict_from_json(const nlohmann::ordered_json& value);
nlohmann::ordered_json summary_to_json(const RunSummary& summary);

void write_report(std::ostream& out, const BatchResult& result);
void save_report(const std::filesystem::path& file, const BatchResult& result);

struct Report {
  std::vector<Verdict> verdicts;
  std::optional<RunSummary> summary;
};

// Throws Error with the line number on malformed input.
Report read_report(std::istream& in);
Report load_report(const std::filesystem::path& file);

}  // namespace mapscreen::pipeline
