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

#include "mapscreen/inference/model_backend.hpp"

#include <algorithm>
#include <cmath>

#include <opencv2/dnn.hpp>
#include <opencv2/imgproc.hpp>

#include "mapscreen/inference/db_postprocess.hpp"
#include "mapscreen/inference/rectify.hpp"

namespace mapscreen::inference {
namespace {

cv::dnn::Net load_net(const std::string& stage, const std::filesystem::path& path) {
  try {
    cv::dnn::Net net = cv::dnn::readNetFromONNX(path.string());
    if (net.empty()) throw BackendError(stage, "empty network in '" + path.string() + "'");
    net.setPreferableBackend(cv::dnn::DNN_BACKEND_OPENCV);
    net.setPreferableTarget(cv::dnn::DNN_TARGET_CPU);
    return net;
  } catch (const cv::Exception& e) {
    throw BackendError(stage, "cannot load '" + path.string() + "': " + e.what());
  }
}

std::filesystem::path stage_path(const std::string& stage, const ModelBundle& bundle,
                                 std::filesystem::path (ModelBundle::*getter)() const) {
  try {
    return (bundle.*getter)();
  } catch (const Error& e) {
    throw BackendError(stage, e.what());
  }
}

// RGB float image normalized per channel.
cv::Mat normalized_rgb(const cv::Mat& bgr, cv::Size size, const ChannelNorm& norm) {
  cv::Mat resized;
  if (bgr.size() == size) {
    resized = bgr;
  } else {
    cv::resize(bgr, resized, size, 0, 0, cv::INTER_LINEAR);
  }
  cv::Mat rgb;
  cv::cvtColor(resized, rgb, cv::COLOR_BGR2RGB);
  cv::Mat f;
  rgb.convertTo(f, CV_32FC3, 1.0 / 255.0);
  std::vector<cv::Mat> channels;
  cv::split(f, channels);
  for (std::size_t c = 0; c < 3; ++c) {
    channels[c] = (channels[c] - norm.mean[c]) / norm.std[c];
  }
  cv::merge(channels, f);
  return f;
}

cv::Mat to_blob(const cv::Mat& rgb_float) {
  return cv::dnn::blobFromImage(rgb_float, 1.0, cv::Size(), cv::Scalar(), false, false, CV_32F);
}

int round_up_32(int v) { return std::max(32, (v + 31) / 32 * 32); }

}  // namespace

struct ModelClassifier::Net {
  cv::dnn::Net net;
};
struct ModelDetector::Net {
  cv::dnn::Net net;
};
struct ModelRecognizer::Net {
  cv::dnn::Net net;
};

ModelClassifier::ModelClassifier(const ModelBundle& bundle, double threshold)
    : net_(std::make_unique<Net>(
          Net{load_net("classify", stage_path("classify", bundle, &ModelBundle::classifier_path))})),
      identifier_(bundle.dir().string()),
      meta_(bundle.meta()),
      threshold_(threshold) {}

ModelClassifier::~ModelClassifier() = default;

BackendDescriptor ModelClassifier::descriptor() const {
  return {BackendKind::ModelFile, identifier_, false};
}

cv::Mat ModelClassifier::preprocess(const cv::Mat& bgr, int size, const ChannelNorm& norm) {
  return to_blob(normalized_rgb(bgr, cv::Size(size, size), norm));
}

double ModelClassifier::two_class_score(const cv::Mat& logits, std::size_t positive_class) {
  if (logits.total() != 2 || positive_class > 1) {
    throw BackendError("classify", "expected 2 logits, got " + std::to_string(logits.total()));
  }
  const cv::Mat flat = logits.reshape(1, 1);
  const double a = flat.at<float>(0, 0);
  const double b = flat.at<float>(0, 1);
  const double m = std::max(a, b);
  const double ea = std::exp(a - m);
  const double eb = std::exp(b - m);
  return (positive_class == 0 ? ea : eb) / (ea + eb);
}

MapClassOutput ModelClassifier::do_classify(const ImageInput& image) {
  const cv::Mat blob = preprocess(image.pixels(), meta_.input_size, meta_.norm);
  cv::Mat logits;
  try {
    net_->net.setInput(blob);
    logits = net_->net.forward().clone();
  } catch (const cv::Exception& e) {
    throw BackendError("classify", e.what());
  }
  const double score = two_class_score(logits, meta_.positive_class());
  return {score >= threshold_, score};
}

ModelDetector::ModelDetector(const ModelBundle& bundle)
    : net_(std::make_unique<Net>(
          Net{load_net("detect", stage_path("detect", bundle, &ModelBundle::detector_path))})),
      identifier_(bundle.dir().string()),
      settings_(bundle.meta().detector) {}

ModelDetector::~ModelDetector() = default;

BackendDescriptor ModelDetector::descriptor() const {
  return {BackendKind::ModelFile, identifier_, false};
}

std::vector<TextRegion> ModelDetector::do_detect(const ImageInput& image) {
  const cv::Mat& bgr = image.pixels();
  const cv::Size input = settings_.input_size
                             ? cv::Size(*settings_.input_size, *settings_.input_size)
                             : cv::Size(round_up_32(bgr.cols), round_up_32(bgr.rows));
  const cv::Mat blob = to_blob(normalized_rgb(bgr, input, settings_.norm));
  cv::Mat out;
  try {
    net_->net.setInput(blob);
    out = net_->net.forward().clone();
  } catch (const cv::Exception& e) {
    throw BackendError("detect", e.what());
  }
  // [N, C, H, W] or [N, H, W]; channel 0 is the probability map.
  if (out.dims < 3) throw BackendError("detect", "probability map must have at least 3 dimensions");
  const int rows = out.size[out.dims - 2];
  const int cols = out.size[out.dims - 1];
  const cv::Mat probability(rows, cols, CV_32F, out.ptr<float>());
  return db_postprocess(probability.clone(), settings_, bgr.size());
}

ModelRecognizer::ModelRecognizer(const ModelBundle& bundle)
    : net_(std::make_unique<Net>(
          Net{load_net("recognize", stage_path("recognize", bundle, &ModelBundle::recognizer_path))})),
      identifier_(bundle.dir().string()),
      settings_(*bundle.meta().recognizer) {}

ModelRecognizer::~ModelRecognizer() = default;

BackendDescriptor ModelRecognizer::descriptor() const {
  return {BackendKind::ModelFile, identifier_, false};
}

std::pair<std::string, double> ModelRecognizer::ctc_greedy(const cv::Mat& scores,
                                                           const RecognizerSettings& settings) {
  CV_Assert(scores.type() == CV_32F && scores.dims == 2);
  if (static_cast<std::size_t>(scores.cols) != settings.charset.size()) {
    throw BackendError("recognize", "model emits " + std::to_string(scores.cols) +
                                        " classes but charset has " +
                                        std::to_string(settings.charset.size()));
  }
  std::string text;
  double confidence_sum = 0.0;
  std::size_t kept = 0;
  int previous = -1;
  for (int t = 0; t < scores.rows; ++t) {
    const float* row = scores.ptr<float>(t);
    const int best = static_cast<int>(std::max_element(row, row + scores.cols) - row);
    double probability = row[best];
    if (!settings.outputs_probabilities) {
      double denominator = 0.0;
      for (int c = 0; c < scores.cols; ++c) denominator += std::exp(static_cast<double>(row[c] - row[best]));
      probability = 1.0 / denominator;
    }
    if (best != settings.blank_index && best != previous) {
      text += settings.charset[static_cast<std::size_t>(best)];
      confidence_sum += probability;
      ++kept;
    }
    previous = best;
  }
  if (kept == 0) return {std::string(), 0.0};
  return {text, std::clamp(confidence_sum / static_cast<double>(kept), 0.0, 1.0)};
}

RecognizedInstance ModelRecognizer::do_recognize(const ImageInput& image, const TextRegion& region) {
  const cv::Mat crop = rectify_crop(image.pixels(), region.polygon);

  const int height = settings_.input_height;
  const int width = std::clamp(
      static_cast<int>(std::ceil(height * static_cast<double>(crop.cols) / crop.rows)), 1,
      settings_.input_width);
  const cv::Mat line = normalized_rgb(crop, cv::Size(width, height), settings_.norm);
  cv::Mat padded = cv::Mat::zeros(height, settings_.input_width, CV_32FC3);
  line.copyTo(padded(cv::Rect(0, 0, width, height)));

  cv::Mat out;
  try {
    net_->net.setInput(to_blob(padded));
    out = net_->net.forward().clone();
  } catch (const cv::Exception&) {
    return {region, {}, 0.0};
  }

  int steps = 0;
  int classes = 0;
  if (out.dims == 2) {
    steps = out.size[0];
    classes = out.size[1];
  } else if (out.dims == 3) {
    steps = settings_.time_major ? out.size[0] : out.size[1];
    classes = out.size[2];
    if ((settings_.time_major ? out.size[1] : out.size[0]) != 1) {
      throw BackendError("recognize", "expected batch size 1");
    }
  } else {
    throw BackendError("recognize", "unexpected output rank " + std::to_string(out.dims));
  }
  const cv::Mat scores(steps, classes, CV_32F, out.ptr<float>());
  auto [text, confidence] = ctc_greedy(scores, settings_);
  return {region, std::move(text), confidence};
}

}  // namespace mapscreen::inference
