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

#include "mapscreen/inference/prediction_cache.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include "common/json_util.hpp"

namespace mapscreen::inference {
namespace {

using detail::Json;

[[noreturn]] void fail(const std::string& file, std::size_t line, const std::string& what) {
  throw Error(file + ":" + std::to_string(line) + ": " + what);
}

const Json& require(const Json& object, const char* key, const std::string& file,
                    std::size_t line) {
  const auto it = object.find(key);
  if (it == object.end()) fail(file, line, std::string("missing field '") + key + "'");
  return *it;
}

double require_number(const Json& object, const char* key, const std::string& file,
                      std::size_t line) {
  const Json& v = require(object, key, file, line);
  if (!v.is_number()) fail(file, line, std::string("field '") + key + "' must be a number");
  return v.get<double>();
}

std::string require_string(const Json& object, const char* key, const std::string& file,
                           std::size_t line) {
  const Json& v = require(object, key, file, line);
  if (!v.is_string()) fail(file, line, std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

Json region_to_json(const TextRegion& region) {
  Json out;
  out["polygon"] = detail::quad_to_json(region.polygon);
  out["score"] = region.score;
  return out;
}

TextRegion region_from_json(const Json& value, const std::string& file, std::size_t line) {
  if (!value.is_object()) fail(file, line, "region must be an object");
  std::string problem;
  const auto quad = detail::quad_from_json(require(value, "polygon", file, line), problem);
  if (!quad) fail(file, line, "field 'polygon': " + problem);
  return {*quad, require_number(value, "score", file, line)};
}

template <class Fn>
void for_each_line(std::istream& in, const std::string& file, Fn&& fn) {
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    Json value;
    try {
      value = Json::parse(text);
    } catch (const Json::parse_error& e) {
      fail(file, line, std::string("invalid JSON: ") + e.what());
    }
    if (!value.is_object()) fail(file, line, "expected a JSON object");
    fn(value, line);
  }
}

}  // namespace

void PredictionCache::add_classification(const std::string& image_id, const MapClassOutput& output) {
  if (classify_.insert_or_assign(image_id, output).second) classify_order_.push_back(image_id);
}

void PredictionCache::add_detection(const std::string& image_id, std::vector<TextRegion> regions) {
  if (detect_.insert_or_assign(image_id, std::move(regions)).second) detect_order_.push_back(image_id);
}

void PredictionCache::add_recognition(const std::string& image_id, RecognizedInstance instance) {
  auto& list = recognize_[image_id];
  recognize_order_.emplace_back(image_id, list.size());
  list.push_back(std::move(instance));
}

const MapClassOutput* PredictionCache::classification(const std::string& image_id) const {
  const auto it = classify_.find(image_id);
  return it == classify_.end() ? nullptr : &it->second;
}

const std::vector<TextRegion>* PredictionCache::detection(const std::string& image_id) const {
  const auto it = detect_.find(image_id);
  return it == detect_.end() ? nullptr : &it->second;
}

const RecognizedInstance* PredictionCache::recognition(const std::string& image_id,
                                                       const Quad& polygon) const {
  const auto it = recognize_.find(image_id);
  if (it == recognize_.end()) return nullptr;
  for (const RecognizedInstance& instance : it->second) {
    if (instance.region.polygon == polygon) return &instance;
  }
  return nullptr;
}

PredictionCache PredictionCache::read(std::istream* classify, std::istream* detect,
                                      std::istream* recognize) {
  PredictionCache cache;
  if (classify != nullptr) {
    for_each_line(*classify, kClassifyFile, [&](const Json& v, std::size_t line) {
      const Json& flag = require(v, "is_vietnam_map", kClassifyFile, line);
      if (!flag.is_boolean()) fail(kClassifyFile, line, "field 'is_vietnam_map' must be a boolean");
      cache.add_classification(require_string(v, "image_id", kClassifyFile, line),
                               {flag.get<bool>(), require_number(v, "score", kClassifyFile, line)});
    });
  }
  if (detect != nullptr) {
    for_each_line(*detect, kDetectFile, [&](const Json& v, std::size_t line) {
      const Json& list = require(v, "regions", kDetectFile, line);
      if (!list.is_array()) fail(kDetectFile, line, "field 'regions' must be an array");
      std::vector<TextRegion> regions;
      for (const Json& r : list) regions.push_back(region_from_json(r, kDetectFile, line));
      cache.add_detection(require_string(v, "image_id", kDetectFile, line), std::move(regions));
    });
  }
  if (recognize != nullptr) {
    for_each_line(*recognize, kRecognizeFile, [&](const Json& v, std::size_t line) {
      RecognizedInstance instance;
      instance.region = region_from_json(require(v, "region", kRecognizeFile, line),
                                         kRecognizeFile, line);
      instance.text = require_string(v, "text", kRecognizeFile, line);
      instance.confidence = require_number(v, "confidence", kRecognizeFile, line);
      cache.add_recognition(require_string(v, "image_id", kRecognizeFile, line),
                            std::move(instance));
    });
  }
  return cache;
}

void PredictionCache::write(std::ostream& classify, std::ostream& detect,
                            std::ostream& recognize) const {
  for (const std::string& id : classify_order_) {
    const MapClassOutput& out = classify_.at(id);
    Json line;
    line["image_id"] = id;
    line["is_vietnam_map"] = out.is_vietnam_map;
    line["score"] = out.score;
    classify << line.dump() << '\n';
  }
  for (const std::string& id : detect_order_) {
    Json line;
    line["image_id"] = id;
    line["regions"] = Json::array();
    for (const TextRegion& region : detect_.at(id)) line["regions"].push_back(region_to_json(region));
    detect << line.dump() << '\n';
  }
  for (const auto& [id, index] : recognize_order_) {
    const RecognizedInstance& instance = recognize_.at(id)[index];
    Json line;
    line["image_id"] = id;
    line["region"] = region_to_json(instance.region);
    line["text"] = instance.text;
    line["confidence"] = instance.confidence;
    recognize << line.dump() << '\n';
  }
}

PredictionCache PredictionCache::load(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw Error("prediction cache directory '" + dir.string() + "' does not exist");
  }
  auto open = [&](const char* name) -> std::optional<std::ifstream> {
    const auto path = dir / name;
    if (!std::filesystem::exists(path)) return std::nullopt;
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path.string() + "'");
    return in;
  };
  auto classify = open(kClassifyFile);
  auto detect = open(kDetectFile);
  auto recognize = open(kRecognizeFile);
  return read(classify ? &*classify : nullptr, detect ? &*detect : nullptr,
              recognize ? &*recognize : nullptr);
}

void PredictionCache::save(const std::filesystem::path& dir) const {
  std::filesystem::create_directories(dir);
  std::ofstream classify(dir / kClassifyFile, std::ios::binary);
  std::ofstream detect(dir / kDetectFile, std::ios::binary);
  std::ofstream recognize(dir / kRecognizeFile, std::ios::binary);
  if (!classify || !detect || !recognize) {
    throw Error("cannot write prediction cache into '" + dir.string() + "'");
  }
  write(classify, detect, recognize);
}

}  // namespace mapscreen::inference
