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

#include "mapscreen/pipeline/report.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include "common/json_util.hpp"

namespace mapscreen::pipeline {
namespace {

using detail::Json;

[[noreturn]] void fail(const std::string& what) { throw Error("verdict report: " + what); }

const Json& field(const Json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) fail(std::string("missing field '") + key + "'");
  return *it;
}

std::string string_field(const Json& obj, const char* key) {
  const Json& v = field(obj, key);
  if (!v.is_string()) fail(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

double number_field(const Json& obj, const char* key) {
  const Json& v = field(obj, key);
  if (!v.is_number()) fail(std::string("field '") + key + "' must be a number");
  return v.get<double>();
}

std::size_t count_field(const Json& obj, const char* key) {
  const Json& v = field(obj, key);
  if (!v.is_number_unsigned()) fail(std::string("field '") + key + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

}  // namespace

Json verdict_to_json(const Verdict& verdict) {
  Json out;
  out["image_id"] = verdict.image_id;
  out["label"] = to_string(verdict.label);
  out["reason"] = to_string(verdict.reason);
  out["classifier_score"] = verdict.classifier_score;
  out["evidence"] = Json::array();
  for (const Evidence& e : verdict.evidence) {
    Json item;
    item["polygon"] = detail::quad_to_json(e.instance.region.polygon);
    item["region_score"] = e.instance.region.score;
    item["text"] = e.instance.text;
    item["confidence"] = e.instance.confidence;
    item["normalized"] = e.match.input_normalized.utf8();
    item["matched"] = e.match.matched();
    if (e.match.hit) {
      item["term"] = e.match.hit->term;
      item["distance"] = e.match.hit->distance;
    }
    out["evidence"].push_back(std::move(item));
  }
  if (verdict.error) {
    out["error"] = {{"stage", verdict.error->stage}, {"message", verdict.error->message}};
  }
  return out;
}

Verdict verdict_from_json(const Json& value) {
  if (!value.is_object()) fail("expected a JSON object");
  Verdict verdict;
  verdict.image_id = string_field(value, "image_id");
  const auto label = parse_label(string_field(value, "label"));
  if (!label) fail("unknown label");
  const auto reason = parse_reason(string_field(value, "reason"));
  if (!reason) fail("unknown reason");
  verdict.label = *label;
  verdict.reason = *reason;
  verdict.classifier_score = number_field(value, "classifier_score");

  const Json& evidence = field(value, "evidence");
  if (!evidence.is_array()) fail("field 'evidence' must be an array");
  for (const Json& item : evidence) {
    Evidence e;
    std::string problem;
    const auto quad = detail::quad_from_json(field(item, "polygon"), problem);
    if (!quad) fail("evidence polygon: " + problem);
    e.instance.region = {*quad, number_field(item, "region_score")};
    e.instance.text = string_field(item, "text");
    e.instance.confidence = number_field(item, "confidence");
    e.match.input_normalized = text::normalize(e.instance.text);
    const Json& matched = field(item, "matched");
    if (!matched.is_boolean()) fail("field 'matched' must be a boolean");
    if (matched.get<bool>()) {
      e.match.hit = text::TermHit{string_field(item, "term"), count_field(item, "distance")};
    }
    verdict.evidence.push_back(std::move(e));
  }
  if (const auto it = value.find("error"); it != value.end()) {
    verdict.error = StageFailure{string_field(*it, "stage"), string_field(*it, "message")};
  }
  return verdict;
}

Json summary_to_json(const RunSummary& summary) {
  Json out;
  out["type"] = "summary";
  out["total"] = summary.total;
  out["positive"] = summary.positive;
  out["negative"] = summary.negative;
  Json reasons = Json::object();
  for (Reason r : kReasons) reasons[std::string(to_string(r))] = summary.count(r);
  out["reasons"] = std::move(reasons);
  return out;
}

void write_report(std::ostream& out, const BatchResult& result) {
  for (const Verdict& verdict : result.verdicts) out << verdict_to_json(verdict).dump() << '\n';
  out << summary_to_json(result.summary).dump() << '\n';
}

void save_report(const std::filesystem::path& file, const BatchResult& result) {
  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
  std::ofstream out(file, std::ios::binary);
  if (!out) throw Error("cannot write report '" + file.string() + "'");
  write_report(out, result);
}

Report read_report(std::istream& in) {
  Report report;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const Json value = Json::parse(text);
      if (value.is_object() && value.value("type", "") == "summary") {
        RunSummary summary;
        summary.total = count_field(value, "total");
        summary.positive = count_field(value, "positive");
        summary.negative = count_field(value, "negative");
        const Json& reasons = field(value, "reasons");
        for (Reason r : kReasons) {
          summary.per_reason[static_cast<std::size_t>(r)] =
              count_field(reasons, std::string(to_string(r)).c_str());
        }
        report.summary = summary;
      } else {
        report.verdicts.push_back(verdict_from_json(value));
      }
    } catch (const Json::exception& e) {
      throw Error("verdict report line " + std::to_string(line) + ": " + e.what());
    } catch (const Error& e) {
      throw Error("line " + std::to_string(line) + ": " + e.what());
    }
  }
  return report;
}

Report load_report(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error("cannot open verdict report '" + file.string() + "'");
  return read_report(in);
}

}  // namespace mapscreen::pipeline
