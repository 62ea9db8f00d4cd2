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

#include "mapscreen/inference/model_bundle.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mapscreen/error.hpp"

namespace mapscreen::inference {
namespace {

using Json = nlohmann::json;

class MetaReader {
 public:
  explicit MetaReader(std::string prefix) : prefix_(std::move(prefix)) {}

  [[noreturn]] void fail(const std::string& key, const std::string& what) const {
    throw Error("meta.json: field '" + prefix_ + key + "' " + what);
  }

  int positive_int(const Json& obj, const std::string& key) const {
    const Json& v = obj.at(key);
    if (!v.is_number_integer() || v.get<long long>() <= 0) fail(key, "must be a positive integer");
    return v.get<int>();
  }

  double unit_real(const Json& obj, const std::string& key) const {
    const Json& v = obj.at(key);
    if (!v.is_number() || v.get<double>() < 0.0 || v.get<double>() > 1.0) {
      fail(key, "must be a number in [0, 1]");
    }
    return v.get<double>();
  }

  double positive_real(const Json& obj, const std::string& key) const {
    const Json& v = obj.at(key);
    if (!v.is_number() || v.get<double>() <= 0.0) fail(key, "must be a positive number");
    return v.get<double>();
  }

  std::array<float, 3> triple(const Json& obj, const std::string& key, bool positive) const {
    const Json& v = obj.at(key);
    if (!v.is_array() || v.size() != 3) fail(key, "must be an array of 3 numbers");
    std::array<float, 3> out{};
    for (std::size_t i = 0; i < 3; ++i) {
      if (!v[i].is_number()) fail(key, "must be an array of 3 numbers");
      out[i] = v[i].get<float>();
      if (positive && out[i] <= 0.0F) fail(key, "entries must be positive");
    }
    return out;
  }

  std::vector<std::string> strings(const Json& obj, const std::string& key) const {
    const Json& v = obj.at(key);
    if (!v.is_array() || v.empty()) fail(key, "must be a non-empty array of strings");
    std::vector<std::string> out;
    for (const Json& s : v) {
      if (!s.is_string()) fail(key, "must be a non-empty array of strings");
      out.push_back(s.get<std::string>());
    }
    return out;
  }

  bool boolean(const Json& obj, const std::string& key) const {
    const Json& v = obj.at(key);
    if (!v.is_boolean()) fail(key, "must be a boolean");
    return v.get<bool>();
  }

  void norm(const Json& obj, ChannelNorm& out) const {
    if (obj.contains("mean")) out.mean = triple(obj, "mean", false);
    if (obj.contains("std")) out.std = triple(obj, "std", true);
  }

 private:
  std::string prefix_;
};

}  // namespace

std::size_t BundleMeta::positive_class() const {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == "vietnam_map") return i;
  }
  return 1;
}

BundleMeta ModelBundle::parse_meta(const std::string& json_text) {
  Json root;
  try {
    root = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    throw Error(std::string("meta.json: invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw Error("meta.json: expected a JSON object");

  const MetaReader top("");
  for (const char* key : {"input_size", "mean", "std", "labels"}) {
    if (!root.contains(key)) top.fail(key, "is required");
  }
  BundleMeta meta;
  meta.input_size = top.positive_int(root, "input_size");
  meta.norm.mean = top.triple(root, "mean", false);
  meta.norm.std = top.triple(root, "std", true);
  meta.labels = top.strings(root, "labels");

  meta.detector.norm = meta.norm;
  if (root.contains("detector")) {
    const Json& det = root.at("detector");
    const MetaReader r("detector.");
    if (!det.is_object()) top.fail("detector", "must be an object");
    if (det.contains("input_size") && !det.at("input_size").is_null()) {
      meta.detector.input_size = r.positive_int(det, "input_size");
    }
    r.norm(det, meta.detector.norm);
    if (det.contains("binarize_threshold")) {
      meta.detector.binarize_threshold = r.unit_real(det, "binarize_threshold");
    }
    if (det.contains("box_threshold")) meta.detector.box_threshold = r.unit_real(det, "box_threshold");
    if (det.contains("unclip_ratio")) meta.detector.unclip_ratio = r.positive_real(det, "unclip_ratio");
    if (det.contains("max_candidates")) {
      meta.detector.max_candidates = r.positive_int(det, "max_candidates");
    }
  }

  if (root.contains("recognizer")) {
    const Json& rec = root.at("recognizer");
    const MetaReader r("recognizer.");
    if (!rec.is_object()) top.fail("recognizer", "must be an object");
    if (!rec.contains("charset")) r.fail("charset", "is required");
    RecognizerSettings settings;
    settings.charset = r.strings(rec, "charset");
    if (rec.contains("input_height")) settings.input_height = r.positive_int(rec, "input_height");
    if (rec.contains("input_width")) settings.input_width = r.positive_int(rec, "input_width");
    r.norm(rec, settings.norm);
    if (rec.contains("blank_index")) {
      const Json& v = rec.at("blank_index");
      if (!v.is_number_integer() || v.get<long long>() < 0 ||
          v.get<std::size_t>() >= settings.charset.size()) {
        r.fail("blank_index", "must index into charset");
      }
      settings.blank_index = v.get<int>();
    }
    if (rec.contains("time_major")) settings.time_major = r.boolean(rec, "time_major");
    if (rec.contains("outputs_probabilities")) {
      settings.outputs_probabilities = r.boolean(rec, "outputs_probabilities");
    }
    meta.recognizer = std::move(settings);
  }
  return meta;
}

ModelBundle ModelBundle::open(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw Error("model bundle directory '" + dir.string() + "' does not exist");
  }
  const auto meta_path = dir / kMetaFile;
  std::ifstream in(meta_path);
  if (!in) throw Error("model bundle '" + dir.string() + "' has no meta.json");
  std::stringstream text;
  text << in.rdbuf();

  ModelBundle bundle;
  bundle.dir_ = dir;
  bundle.meta_ = parse_meta(text.str());
  return bundle;
}

bool ModelBundle::has_classifier() const { return std::filesystem::exists(dir_ / kClassifierFile); }
bool ModelBundle::has_detector() const { return std::filesystem::exists(dir_ / kDetectorFile); }
bool ModelBundle::has_recognizer() const { return std::filesystem::exists(dir_ / kRecognizerFile); }

std::filesystem::path ModelBundle::classifier_path() const {
  if (!has_classifier()) throw Error("model bundle '" + dir_.string() + "' has no classifier.onnx");
  return dir_ / kClassifierFile;
}

std::filesystem::path ModelBundle::detector_path() const {
  if (!has_detector()) throw Error("model bundle '" + dir_.string() + "' has no detector.onnx");
  return dir_ / kDetectorFile;
}

std::filesystem::path ModelBundle::recognizer_path() const {
  if (!has_recognizer()) throw Error("model bundle '" + dir_.string() + "' has no recognizer.onnx");
  if (!meta_.recognizer) {
    throw Error("model bundle '" + dir_.string() + "' has no recognizer section in meta.json");
  }
  return dir_ / kRecognizerFile;
}

}  // namespace mapscreen::inference
