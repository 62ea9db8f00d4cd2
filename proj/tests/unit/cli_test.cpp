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

#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "mapscreen/cli/app.hpp"
#include "mapscreen/cli/config_file.hpp"
#include "reference_dataset.hpp"
#include "temp_dir.hpp"

namespace mapscreen::cli {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "mapscreen");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  Outcome o;
  o.code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

std::size_t count_of(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) ++n;
  return n;
}

// A generated corpus shared by the tests below.
class CliCorpus : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    dir_ = new testing::TempDir();
    const Outcome o = run_cli({"gen-corpus", "--size", "60", "--seed", "3", "-o", (*dir_ / "c").string()});
    ASSERT_EQ(o.code, kExitOk) << o.err;
  }
  static void TearDownTestSuite() {
    delete dir_;
    dir_ = nullptr;
  }

  static fs::path corpus() { return *dir_ / "c"; }
  static std::string manifest() { return (corpus() / "manifest.jsonl").string(); }
  static std::string cache() { return (corpus() / "predictions").string(); }

  Outcome screen(const std::vector<std::string>& extra, const fs::path& out) {
    std::vector<std::string> args = {"screen", "--manifest", manifest(), "--backend", "cached",
                                     "--cache-dir", cache(), "-o", out.string()};
    args.insert(args.end(), extra.begin(), extra.end());
    return run_cli(args);
  }

  testing::TempDir work_;

 private:
  static testing::TempDir* dir_;
};

testing::TempDir* CliCorpus::dir_ = nullptr;

TEST(Cli, HelpOnEveryCommand) {
  EXPECT_EQ(run_cli({"--help"}).code, kExitOk);
  for (const char* cmd : {"screen", "evaluate", "sweep", "stats", "gen-corpus"}) {
    const Outcome o = run_cli({cmd, "--help"});
    EXPECT_EQ(o.code, kExitOk) << cmd;
    EXPECT_NE(o.out.find(cmd), std::string::npos) << o.out;
  }
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, kExitUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"screen", "--no-such-flag"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"screen"}).code, kExitUsage);
}

TEST(Cli, NegativeLambdaIsRejected) {
  testing::TempDir dir;
  testing::write_file(dir / "a.png", "x");
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"screen", "--lambda", "-1", (dir / "a.png").string()},
        std::vector<std::string>{"screen", "--lambda=-1", (dir / "a.png").string()}}) {
    const Outcome o = run_cli(args);
    EXPECT_EQ(o.code, kExitUsage);
    EXPECT_NE(o.err.find("'lambda'"), std::string::npos) << o.err;
  }
}

TEST(Cli, ScreensPathsWithMockBackends) {
  testing::TempDir dir;
  testing::write_file(dir / "imgs/b.png", "x");
  testing::write_file(dir / "imgs/a.jpg", "x");
  testing::write_file(dir / "imgs/notes.txt", "x");
  const Outcome o = run_cli({"screen", (dir / "imgs").string()});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  EXPECT_EQ(count_of(o.out, "\"image_id\""), 2U);
  EXPECT_LT(o.out.find("a.jpg"), o.out.find("b.png"));
  EXPECT_NE(o.err.find("2 images: 2 positive"), std::string::npos) << o.err;
  EXPECT_EQ(run_cli({"screen", (dir / "missing.png").string()}).code, kExitUsage);
}

TEST(Cli, MissingModelBundleIsARuntimeError) {
  testing::TempDir dir;
  testing::write_file(dir / "a.png", "x");
  const Outcome o = run_cli({"screen", "--backend", "model", "--model-dir", (dir / "none").string(),
                             (dir / "a.png").string()});
  EXPECT_EQ(o.code, kExitRuntime) << o.err;
}

TEST_F(CliCorpus, GenCorpusIsByteIdentical) {
  for (const char* f : {"manifest.jsonl", "predictions/classify.jsonl", "predictions/recognize.jsonl"}) {
    const Outcome again =
        run_cli({"gen-corpus", "--size", "60", "--seed", "3", "-o", (work_ / "again").string()});
    ASSERT_EQ(again.code, kExitOk);
    EXPECT_EQ(testing::read_file(work_ / "again" / f), testing::read_file(corpus() / f)) << f;
  }
  const Outcome zero = run_cli({"gen-corpus", "--size", "0", "-o", (work_ / "z").string()});
  EXPECT_EQ(zero.code, kExitUsage);
  EXPECT_NE(zero.err.find("--size"), std::string::npos) << zero.err;
  EXPECT_EQ(run_cli({"gen-corpus", "--size", "5", "--mix", "1,1", "-o", (work_ / "m").string()}).code,
            kExitUsage);
}

TEST_F(CliCorpus, ScreenAndEvaluate) {
  const Outcome serial = screen({"-j", "1"}, work_ / "v1.jsonl");
  ASSERT_EQ(serial.code, kExitOk) << serial.err;
  ASSERT_EQ(screen({"-j", "8"}, work_ / "v8.jsonl").code, kExitOk);
  EXPECT_EQ(testing::read_file(work_ / "v1.jsonl"), testing::read_file(work_ / "v8.jsonl"));
  EXPECT_NE(serial.err.find("60 images"), std::string::npos);

  const Outcome eval = run_cli({"evaluate", "--verdicts", (work_ / "v1.jsonl").string(), "--manifest",
                                manifest()});
  ASSERT_EQ(eval.code, kExitOk) << eval.err;
  const auto doc = nlohmann::json::parse(eval.out);
  ASSERT_EQ(doc["reports"].size(), 3U);
  for (const auto& r : doc["reports"]) {
    EXPECT_EQ(r["f1"].get<double>(), 1.0) << r.dump();
    EXPECT_EQ(r["ap"].get<double>(), 1.0);
  }

  const Outcome to_file = run_cli({"evaluate", "--verdicts", (work_ / "v1.jsonl").string(), "--manifest",
                                   manifest(), "--setting", "vn", "-o", (work_ / "m.json").string()});
  ASSERT_EQ(to_file.code, kExitOk);
  EXPECT_NE(to_file.out.find("100.00"), std::string::npos) << to_file.out;
  EXPECT_EQ(nlohmann::json::parse(testing::read_file(work_ / "m.json"))["reports"].size(), 1U);
}

TEST_F(CliCorpus, EvaluateRejectsDisjointIds) {
  ASSERT_EQ(screen({}, work_ / "v.jsonl").code, kExitOk);
  ASSERT_EQ(run_cli({"gen-corpus", "--size", "10", "-o", (work_ / "other").string()}).code, kExitOk);
  const Outcome o = run_cli({"evaluate", "--verdicts", (work_ / "v.jsonl").string(), "--manifest",
                             (work_ / "other/manifest.jsonl").string()});
  EXPECT_EQ(o.code, kExitRuntime);
  EXPECT_NE(o.err.find("unexpected verdicts: syn-000011"), std::string::npos) << o.err;
}

TEST_F(CliCorpus, ConfigFileAndFlagPrecedence) {
  // Relative cache directory resolves against the config file's location.
  testing::write_file(corpus() / "strict.json",
                      R"({"lambda": 0, "backend": "cached", "cache_dir": "predictions", "jobs": 2})");
  const std::string config = (corpus() / "strict.json").string();
  ASSERT_EQ(run_cli({"screen", "--manifest", manifest(), "--config", config, "-o",
                     (work_ / "cfg.jsonl").string()})
                .code,
            kExitOk);
  // Nothing matches at lambda 0, so no verdict can cite a landmark.
  EXPECT_EQ(count_of(testing::read_file(work_ / "cfg.jsonl"), "\"reason\":\"ContainsLandmark\""), 0U);

  ASSERT_EQ(run_cli({"screen", "--manifest", manifest(), "--config", config, "--lambda", "2", "-o",
                     (work_ / "flag.jsonl").string()})
                .code,
            kExitOk);
  ASSERT_EQ(screen({}, work_ / "default.jsonl").code, kExitOk);
  EXPECT_EQ(testing::read_file(work_ / "flag.jsonl"), testing::read_file(work_ / "default.jsonl"));

  testing::write_file(work_ / "bad.json", R"({"lamda": 2})");
  const Outcome bad = run_cli({"screen", "--manifest", manifest(), "--config", (work_ / "bad.json").string()});
  EXPECT_EQ(bad.code, kExitUsage);
  EXPECT_NE(bad.err.find("'lamda'"), std::string::npos) << bad.err;
}

TEST_F(CliCorpus, Sweep) {
  ASSERT_EQ(screen({}, work_ / "v.jsonl").code, kExitOk);
  const std::string verdicts = (work_ / "v.jsonl").string();
  const Outcome o = run_cli({"sweep", "--verdicts", verdicts, "--manifest", manifest(), "--lambdas", "5,2,1",
                             "--json", (work_ / "s.json").string()});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  EXPECT_NE(o.out.find("Landmark recall"), std::string::npos);
  EXPECT_EQ(nlohmann::json::parse(testing::read_file(work_ / "s.json"))["rows"].size(), 3U);
  EXPECT_EQ(run_cli({"sweep", "--verdicts", verdicts, "--manifest", manifest(), "--lambdas", ""}).code,
            kExitUsage);
  EXPECT_EQ(run_cli({"sweep", "--verdicts", verdicts, "--manifest", manifest(), "--lambdas", "2,x"}).code,
            kExitUsage);
}

TEST(Cli, EvaluateReplaysStoredCounts) {
  const Outcome o = run_cli({"evaluate", "--counts", "73697337,20172663,4812663"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  const auto r = nlohmann::json::parse(o.out)["reports"][0];
  EXPECT_EQ(r["percent"]["precision"], "78.51");
  EXPECT_EQ(r["percent"]["recall"], "93.87");
  EXPECT_EQ(r["percent"]["f1"], "85.51");
  EXPECT_EQ(run_cli({"evaluate", "--counts", "1,2"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"evaluate", "--counts", "1,-2,3"}).code, kExitUsage);
}

TEST(Cli, Stats) {
  testing::TempDir dir;
  testing::write_file(dir / "ref.jsonl", mapscreen::testing::reference_manifest_text());
  const Outcome ref = run_cli({"stats", "--manifest", (dir / "ref.jsonl").string(), "-o",
                               (dir / "s.json").string()});
  ASSERT_EQ(ref.code, kExitOk) << ref.err;
  EXPECT_NE(ref.out.find("6858"), std::string::npos);
  const auto doc = nlohmann::json::parse(testing::read_file(dir / "s.json"));
  EXPECT_EQ(doc["total"], 6858);
  EXPECT_EQ(doc["train"], 4801);
  EXPECT_EQ(doc["test"], 2057);

  testing::write_file(dir / "empty.jsonl", "");
  const Outcome empty = run_cli({"stats", "--manifest", (dir / "empty.jsonl").string()});
  ASSERT_EQ(empty.code, kExitOk);
  EXPECT_NE(empty.out.find("Total"), std::string::npos);

  testing::write_file(dir / "bad.jsonl",
                      R"({"image_id":"a","path":"a.png","category":"not_map","language":"vi","split":"test"})"
                      "\n{oops\n");
  const Outcome bad = run_cli({"stats", "--manifest", (dir / "bad.jsonl").string()});
  EXPECT_EQ(bad.code, kExitRuntime);
  EXPECT_NE(bad.err.find("line 2"), std::string::npos) << bad.err;
}

TEST(ConfigFile, ParseAndMerge) {
  const Settings s = parse_config(
      R"({"terms": ["Hoàng Sa"], "lambda": 3, "comparator": "inclusive",
          "backends": {"detector": {"kind": "cached", "path": "cache"}}})",
      "/etc/ms");
  ASSERT_TRUE(s.lambda);
  EXPECT_EQ(*s.lambda, 3);
  ASSERT_TRUE(s.stages[1]);
  EXPECT_EQ(s.stages[1]->path, "/etc/ms/cache");

  Settings flags;
  flags.lambda = 1;
  Settings merged = s;
  merged.merge(flags);
  EXPECT_EQ(*merged.lambda, 1);
  EXPECT_EQ(*merged.comparator, "inclusive");
  EXPECT_EQ(resolve_policy(merged).lambda(), 1U);
  EXPECT_EQ(resolve_policy(merged).comparator(), text::Comparator::InclusiveLeq);

  auto field_of = [](const std::string& json) {
    try {
      parse_config(json, {});
    } catch (const ConfigError& e) {
      return e.field();
    }
    return std::string("none");
  };
  EXPECT_EQ(field_of(R"({"colour": 1})"), "colour");
  EXPECT_EQ(field_of(R"({"lambda": "two"})"), "lambda");
  EXPECT_EQ(field_of(R"({"backends": {"ocr": {"kind": "mock"}}})"), "backends.ocr");
  EXPECT_EQ(field_of(R"({"backends": {"detector": {"kind": "gpu"}}})"), "backends.detector.kind");
  EXPECT_EQ(field_of("[1]"), "config");
  EXPECT_EQ(field_of("{"), "config");
}

}  // namespace
}  // namespace mapscreen::cli
