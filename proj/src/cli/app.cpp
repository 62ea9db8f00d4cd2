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

#include "mapscreen/cli/app.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mapscreen/cli/config_file.hpp"
#include "mapscreen/dataset/manifest.hpp"
#include "mapscreen/dataset/stats.hpp"
#include "mapscreen/error.hpp"
#include "mapscreen/eval/lambda_sweep.hpp"
#include "mapscreen/eval/metrics.hpp"
#include "mapscreen/eval/report.hpp"
#include "mapscreen/noise/corpus.hpp"
#include "mapscreen/pipeline/backends.hpp"
#include "mapscreen/pipeline/report.hpp"
#include "mapscreen/pipeline/screen.hpp"

namespace mapscreen::cli {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

// Bad arguments that CLI11 cannot express as constraints.
class UsageError : public Error {
 public:
  using Error::Error;
};

constexpr const char* kRankingNote =
    "Positive verdicts rank by 0.5 + 0.5*classifier_score, all others by 0.5*(1 - classifier_score)";

const std::set<std::string> kImageExtensions = {".png", ".jpg", ".jpeg", ".bmp", ".tif", ".tiff", ".webp"};

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  const fs::path file(path);
  if (file.has_parent_path()) fs::create_directories(file.parent_path());
  std::ofstream f(file, std::ios::binary);
  f << text;
  if (!f) throw Error("cannot write " + path);
}

// Flags shared by the commands that build a match policy or a pipeline.
struct PipelineFlags {
  std::string config;
  std::int64_t lambda = 0;
  std::string comparator;
  std::string granularity;
  std::int64_t jobs = 1;
  double threshold = 0.5;
  std::string backend;
  std::string cache_dir;
  std::string model_dir;
  std::string mock_key;
  std::vector<CLI::Option*> options;

  void add_policy(CLI::App* cmd) {
    cmd->add_option("--config", config, "JSON configuration file; flags override its values")
        ->check(CLI::ExistingFile);
    options.push_back(cmd->add_option("--lambda", lambda, "Edit-distance threshold (default 2)"));
    options.push_back(cmd->add_option("--comparator", comparator,
                                      "strict (distance < lambda, default) or inclusive (distance <= lambda)"));
    options.push_back(cmd->add_option("--granularity", granularity,
                                      "instance (whole text, default) or token (1-2 token windows)"));
  }

  void add_backends(CLI::App* cmd) {
    options.push_back(cmd->add_option("--jobs,-j", jobs, "Worker threads (default 1)"));
    options.push_back(cmd->add_option("--threshold", threshold,
                                      "Classifier decision threshold in (0, 1) (default 0.5)"));
    options.push_back(cmd->add_option("--backend", backend, "mock, cached or model (default mock)"));
    options.push_back(cmd->add_option("--cache-dir", cache_dir, "Prediction cache directory (cached backend)"));
    options.push_back(cmd->add_option("--model-dir", model_dir, "Model bundle directory (model backend)"));
    options.push_back(cmd->add_option("--mock-key", mock_key, "Mock classifier answer: vn-map or not-map"));
  }

  bool given(const std::string& name) const {
    for (CLI::Option* o : options) {
      if (o->check_lname(name) && o->count() > 0) return true;
    }
    return false;
  }

  Settings settings() const {
    Settings s;
    if (!config.empty()) s = load_config_file(config);
    Settings flags;
    if (given("lambda")) flags.lambda = lambda;
    if (given("comparator")) flags.comparator = comparator;
    if (given("granularity")) flags.granularity = granularity;
    if (given("jobs")) flags.jobs = jobs;
    if (given("threshold")) flags.classifier_threshold = threshold;
    if (given("backend")) flags.backend = backend;
    if (given("cache-dir")) flags.cache_dir = cache_dir;
    if (given("model-dir")) flags.model_dir = model_dir;
    if (given("mock-key")) flags.mock_key = mock_key;
    s.merge(flags);
    return s;
  }
};

std::vector<pipeline::ScreenItem> collect_inputs(const std::vector<std::string>& inputs) {
  std::vector<pipeline::ScreenItem> items;
  for (const std::string& input : inputs) {
    const fs::path p(input);
    if (fs::is_directory(p)) {
      std::vector<fs::path> found;
      for (const auto& entry : fs::directory_iterator(p)) {
        std::string ext = entry.path().extension().string();
        std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
        if (entry.is_regular_file() && kImageExtensions.contains(ext)) found.push_back(entry.path());
      }
      std::sort(found.begin(), found.end());
      for (const fs::path& f : found) items.push_back({f.generic_string(), f});
    } else if (fs::exists(p)) {
      items.push_back({p.generic_string(), p});
    } else {
      throw UsageError("input does not exist: " + input);
    }
  }
  std::set<std::string> seen;
  for (const auto& item : items) {
    if (!seen.insert(item.image_id).second) throw UsageError("input listed twice: " + item.image_id);
  }
  return items;
}

std::vector<std::size_t> parse_lambdas(const std::string& csv) {
  std::vector<std::size_t> out;
  std::size_t start = 0;
  while (start < csv.size()) {
    const std::size_t comma = std::min(csv.find(',', start), csv.size());
    const std::string token = csv.substr(start, comma - start);
    std::size_t value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || end != token.data() + token.size()) {
      throw ConfigError("lambdas", "'" + token + "' is not a non-negative integer");
    }
    out.push_back(value);
    start = comma + 1;
  }
  if (out.empty()) throw UsageError("--lambdas needs at least one value");
  return out;
}

eval::Setting setting_or_throw(const std::string& token) {
  const auto s = eval::parse_setting(token);
  if (!s) throw ConfigError("setting", "expected eng, vn or eng-vn, got '" + token + "'");
  return *s;
}

std::string render_reports(const std::vector<eval::EvalReport>& reports) {
  std::ostringstream t;
  t << std::left << std::setw(10) << "Setting" << std::right << std::setw(11) << "Precision" << std::setw(9)
    << "Recall" << std::setw(10) << "F1-Score" << std::setw(9) << "AP" << '\n';
  for (const auto& r : reports) {
    t << std::left << std::setw(10) << eval::to_string(r.setting) << std::right << std::setw(11)
      << eval::percent(r.precision.value) << std::setw(9) << eval::percent(r.recall.value) << std::setw(10)
      << eval::percent(r.f1) << std::setw(9) << (r.ap ? eval::percent(*r.ap) : std::string("-")) << '\n';
  }
  return t.str();
}

// ---- screen ---------------------------------------------------------------

struct ScreenCmd {
  PipelineFlags flags;
  std::string manifest;
  std::vector<std::string> inputs;
  std::string out_path;
  bool progress = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--manifest", manifest, "Manifest of images to screen")->check(CLI::ExistingFile);
    cmd->add_option("inputs", inputs, "Image files or directories (instead of --manifest)");
    cmd->add_option("--out,-o", out_path, "Verdict report (JSON lines); '-' or unset for stdout");
    cmd->add_flag("--progress", progress, "Print progress lines to stderr");
    flags.add_policy(cmd);
    flags.add_backends(cmd);
  }

  int run(std::ostream& out, std::ostream& err) const {
    if (manifest.empty() == inputs.empty()) throw UsageError("give either --manifest or input paths");
    const pipeline::PipelineConfig config = resolve(flags.settings());
    const std::vector<pipeline::ScreenItem> items =
        manifest.empty() ? collect_inputs(inputs) : pipeline::items_from_manifest(dataset::load_manifest(manifest));

    const auto backends = pipeline::Backends::from_config(config);
    pipeline::ProgressFn on_progress;
    if (progress) {
      const std::size_t step = std::max<std::size_t>(1, items.size() / 20);
      on_progress = [&err, step](std::size_t done, std::size_t total) {
        if (done % step == 0 || done == total) err << "screened " << done << "/" << total << '\n';
      };
    }
    const pipeline::BatchResult result = pipeline::screen_batch(items, *backends, config, on_progress);

    std::ostringstream report;
    pipeline::write_report(report, result);
    write_text(out_path, report.str(), out);

    const auto& s = result.summary;
    err << s.total << " images: " << s.positive << " positive, " << s.negative << " negative (";
    for (std::size_t i = 0; i < std::size(pipeline::kReasons); ++i) {
      err << (i ? ", " : "") << pipeline::to_string(pipeline::kReasons[i]) << ' ' << s.count(pipeline::kReasons[i]);
    }
    err << ")\n";
    return kExitOk;
  }
};

// ---- evaluate -------------------------------------------------------------

struct EvaluateCmd {
  std::string verdicts;
  std::string manifest;
  std::string setting = "all";
  std::string split;
  std::string counts;
  std::string out_path;

  void attach(CLI::App* cmd) {
    cmd->add_option("--verdicts", verdicts, "Verdict report written by screen")->check(CLI::ExistingFile);
    cmd->add_option("--manifest", manifest, "Ground-truth manifest")->check(CLI::ExistingFile);
    cmd->add_option("--setting", setting, "eng, vn, eng-vn or all (default all)");
    cmd->add_option("--split", split, "Restrict to train or test entries");
    cmd->add_option("--counts", counts, "Score stored counts tp,fp,fn[,tn] instead of a verdict report");
    cmd->add_option("--out,-o", out_path, "Metrics document (JSON); unset prints it to stdout");
  }

  int run(std::ostream& out, std::ostream&) const {
    std::vector<eval::EvalReport> reports;
    Json doc;
    if (!counts.empty()) {
      if (!verdicts.empty() || !manifest.empty()) throw UsageError("--counts excludes --verdicts and --manifest");
      reports.push_back(eval::make_report(eval::Setting::EngVn, parse_counts(counts)));
      doc["source"] = "counts";
    } else {
      if (verdicts.empty() || manifest.empty()) throw UsageError("evaluate needs --verdicts and --manifest");
      std::optional<dataset::Split> only;
      if (!split.empty()) {
        only = dataset::parse_split(split);
        if (!only) throw ConfigError("split", "expected train or test, got '" + split + "'");
      }
      std::vector<eval::Setting> settings;
      if (setting == "all") {
        settings.assign(std::begin(eval::kSettings), std::end(eval::kSettings));
      } else {
        settings.push_back(setting_or_throw(setting));
      }
      const pipeline::Report report = pipeline::load_report(verdicts);
      const dataset::Manifest m = dataset::load_manifest(manifest);
      for (eval::Setting s : settings) reports.push_back(eval::evaluate(report.verdicts, m.entries, s, only));
      doc["source"] = "verdicts";
      doc["split"] = only ? Json(dataset::to_string(*only)) : Json(nullptr);
      doc["ap_ranking"] = kRankingNote;
    }
    doc["reports"] = Json::array();
    for (const auto& r : reports) doc["reports"].push_back(eval::to_json(r));

    const std::string json = doc.dump(2) + "\n";
    if (out_path.empty() || out_path == "-") {
      out << json;
    } else {
      write_text(out_path, json, out);
      out << render_reports(reports);
    }
    return kExitOk;
  }

  static eval::ConfusionCounts parse_counts(const std::string& csv) {
    std::vector<std::size_t> values;
    std::size_t start = 0;
    while (start <= csv.size()) {
      const std::size_t comma = std::min(csv.find(',', start), csv.size());
      const std::string token = csv.substr(start, comma - start);
      std::size_t v = 0;
      const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
      if (token.empty() || ec != std::errc() || end != token.data() + token.size()) {
        throw ConfigError("counts", "'" + token + "' is not a non-negative integer");
      }
      values.push_back(v);
      start = comma + 1;
    }
    if (values.size() != 3 && values.size() != 4) throw ConfigError("counts", "expected tp,fp,fn or tp,fp,fn,tn");
    return {values[0], values[1], values[2], values.size() == 4 ? values[3] : 0};
  }
};

// ---- sweep ----------------------------------------------------------------

struct SweepCmd {
  PipelineFlags flags;
  std::string verdicts;
  std::string manifest;
  std::string lambdas;
  std::string setting = "eng-vn";
  std::string out_path;
  std::string json_path;

  void attach(CLI::App* cmd) {
    cmd->add_option("--verdicts", verdicts, "Verdict report with recorded evidence")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--manifest", manifest, "Ground-truth manifest")->required()->check(CLI::ExistingFile);
    cmd->add_option("--lambdas", lambdas, "Comma-separated thresholds, e.g. 5,2,1")->required();
    cmd->add_option("--setting", setting, "eng, vn or eng-vn (default eng-vn)");
    cmd->add_option("--out,-o", out_path, "Table file; unset prints to stdout");
    cmd->add_option("--json", json_path, "Also write the rows as JSON");
    flags.add_policy(cmd);
  }

  int run(std::ostream& out, std::ostream&) const {
    const std::vector<std::size_t> values = parse_lambdas(lambdas);
    const text::MatchPolicy base = resolve_policy(flags.settings());
    const eval::Setting s = setting_or_throw(setting);
    const pipeline::Report report = pipeline::load_report(verdicts);
    const dataset::Manifest m = dataset::load_manifest(manifest);
    const auto rows = eval::lambda_sweep(report.verdicts, m.entries, values, base, s);
    write_text(out_path, eval::render_sweep_table(rows), out);
    if (!json_path.empty()) write_text(json_path, eval::sweep_to_json(rows, base).dump(2) + "\n", out);
    return kExitOk;
  }
};

// ---- stats ----------------------------------------------------------------

struct StatsCmd {
  std::string manifest;
  std::string out_path;

  void attach(CLI::App* cmd) {
    cmd->add_option("--manifest", manifest, "Manifest to summarize")->required()->check(CLI::ExistingFile);
    cmd->add_option("--out,-o", out_path, "Counts as JSON; the table still goes to stdout");
  }

  int run(std::ostream& out, std::ostream& err) const {
    const dataset::Manifest m = dataset::load_manifest(manifest);
    for (const std::string& w : m.warnings) err << "warning: " << w << '\n';
    const dataset::DatasetStats stats = dataset::compute_stats(m.entries);
    out << stats.render_table();
    if (!out_path.empty()) write_text(out_path, stats.to_json().dump(2) + "\n", out);
    return kExitOk;
  }
};

// ---- gen-corpus -----------------------------------------------------------

struct GenCorpusCmd {
  std::int64_t size = 0;
  std::string mix;
  std::int64_t edits = 0;
  std::string ops;
  std::uint64_t seed = 0;
  std::string out_dir;

  void attach(CLI::App* cmd) {
    cmd->add_option("--size", size, "Number of manifest entries (>= 1)")->required();
    cmd->add_option("--mix", mix,
                    "Category weights not_map,not_vietnam_map,with_islands,without_islands "
                    "(default: reference dataset proportions)");
    cmd->add_option("--edits,-k", edits, "OCR noise: edits applied to every text (default 0)");
    cmd->add_option("--ops", ops, "Allowed edits: insert,delete,substitute,diacritic (default all)");
    cmd->add_option("--seed", seed, "Random seed (default 0)");
    cmd->add_option("--out,-o", out_dir, "Output directory")->required();
  }

  int run(std::ostream& out, std::ostream&) const {
    if (size < 1) throw UsageError("--size must be at least 1");
    if (edits < 0) throw ConfigError("edits", "must be a non-negative integer");
    noise::NoiseSpec spec;
    spec.edits = static_cast<std::size_t>(edits);
    spec.seed = seed;
    if (!ops.empty()) spec.ops = noise::parse_edit_ops(ops);
    const noise::CategoryMix weights = mix.empty() ? noise::reference_mix() : noise::parse_mix(mix);
    const noise::SyntheticCorpus corpus = noise::generate_corpus(static_cast<std::size_t>(size), weights, spec);
    corpus.save(out_dir);
    out << "wrote " << corpus.entries.size() << " entries and " << corpus.texts.size() << " texts to " << out_dir
        << '\n';
    return kExitOk;
  }
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Screens map images for Vietnam maps that leave out the Hoang Sa and Truong Sa islands.",
               "mapscreen"};
  app.require_subcommand(1, 1);

  ScreenCmd screen;
  EvaluateCmd evaluate;
  SweepCmd sweep;
  StatsCmd stats;
  GenCorpusCmd gen;
  CLI::App* screen_app = app.add_subcommand("screen", "Screen images and write one verdict per image");
  CLI::App* evaluate_app = app.add_subcommand("evaluate", "Score a verdict report against a manifest");
  CLI::App* sweep_app = app.add_subcommand("sweep", "Re-decide recorded evidence across thresholds");
  CLI::App* stats_app = app.add_subcommand("stats", "Count manifest entries per category, language and split");
  CLI::App* gen_app = app.add_subcommand("gen-corpus", "Write a synthetic manifest with cached predictions");
  screen.attach(screen_app);
  evaluate.attach(evaluate_app);
  sweep.attach(sweep_app);
  stats.attach(stats_app);
  gen.attach(gen_app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (screen_app->parsed()) return screen.run(out, err);
    if (evaluate_app->parsed()) return evaluate.run(out, err);
    if (sweep_app->parsed()) return sweep.run(out, err);
    if (stats_app->parsed()) return stats.run(out, err);
    if (gen_app->parsed()) return gen.run(out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitUsage;
}

}  // namespace mapscreen::cli
