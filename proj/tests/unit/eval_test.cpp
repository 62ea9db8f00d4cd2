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

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mapscreen/eval/average_precision.hpp"
#include "mapscreen/eval/lambda_sweep.hpp"
#include "mapscreen/eval/metrics.hpp"
#include "mapscreen/eval/report.hpp"
#include "oracles.hpp"

namespace mapscreen::eval {
namespace {

using dataset::Category;
using dataset::Language;
using dataset::Polarity;
using pipeline::Label;
using pipeline::Reason;
using pipeline::Verdict;

Verdict verdict(const std::string& id, Label label, double score = 0.9) {
  Verdict v;
  v.image_id = id;
  v.label = label;
  v.reason = label == Label::Positive ? Reason::ExcludesLandmarks : Reason::ContainsLandmark;
  v.classifier_score = score;
  return v;
}

dataset::ManifestEntry entry(const std::string& id, Category category, Language language,
                             dataset::Split split = dataset::Split::Test) {
  dataset::ManifestEntry e;
  e.image_id = id;
  e.path = id + ".png";
  e.category = category;
  e.language = language;
  e.split = split;
  return e;
}

TEST(F1, PublishedPairs) {
  struct Row {
    double p, r, f;
  };
  for (const Row& row : {Row{78.51, 93.87, 85.51}, Row{93.12, 95.91, 94.49}, Row{65.53, 91.28, 76.29},
                         Row{39.25, 53.84, 45.40}}) {
    EXPECT_NEAR(f1(row.p, row.r), row.f, 0.01) << row.p << " " << row.r;
    EXPECT_NEAR(f1(row.p / 100, row.r / 100) * 100, row.f, 0.01);
  }
  EXPECT_EQ(f1(0, 0), 0.0);
  EXPECT_EQ(f1(1, 1), 1.0);
  EXPECT_EQ(percent(0.85512), "85.51");
  EXPECT_EQ(percent(1.0), "100.00");
}

TEST(Confusion, CorrectAndInvertedPredictions) {
  const std::map<std::string, Polarity> truth = {
      {"a", Polarity::Positive}, {"b", Polarity::Positive}, {"c", Polarity::Negative}};
  const std::vector<Verdict> right = {verdict("a", Label::Positive), verdict("b", Label::Positive),
                                      verdict("c", Label::Negative)};
  EXPECT_EQ(confusion_from_verdicts(right, truth), (ConfusionCounts{2, 0, 0, 1}));
  const std::vector<Verdict> wrong = {verdict("a", Label::Negative), verdict("b", Label::Negative),
                                      verdict("c", Label::Positive)};
  const ConfusionCounts inverted = confusion_from_verdicts(wrong, truth);
  EXPECT_EQ(inverted, (ConfusionCounts{0, 1, 2, 0}));
  EXPECT_EQ(precision(inverted).value, 0.0);
  EXPECT_FALSE(precision(inverted).degenerate);
}

TEST(Confusion, TenItemsWithThreeMistakes) {
  std::map<std::string, Polarity> truth;
  std::vector<Verdict> verdicts;
  for (int i = 0; i < 10; ++i) {
    const std::string id = "i" + std::to_string(i);
    const bool positive = i < 5;
    truth[id] = positive ? Polarity::Positive : Polarity::Negative;
    // i4 missed, i5 and i6 wrongly accepted.
    const bool predicted = (positive && i != 4) || i == 5 || i == 6;
    verdicts.push_back(verdict(id, predicted ? Label::Positive : Label::Negative));
  }
  const ConfusionCounts c = confusion_from_verdicts(verdicts, truth);
  EXPECT_EQ(c, (ConfusionCounts{4, 2, 1, 3}));
  EXPECT_DOUBLE_EQ(precision(c).value, 4.0 / 6.0);
  EXPECT_DOUBLE_EQ(recall(c).value, 4.0 / 5.0);
  EXPECT_NEAR(make_report(Setting::EngVn, c).f1, 2 * (4.0 / 6) * 0.8 / (4.0 / 6 + 0.8), 1e-12);
}

TEST(Confusion, ErrorVerdictsCountAsNegative) {
  Verdict failed = verdict("a", Label::Negative);
  failed.reason = Reason::Error;
  failed.error = pipeline::StageFailure{"decode", "x"};
  const std::vector<Verdict> verdicts = {failed};
  EXPECT_EQ(confusion_from_verdicts(verdicts, {{"a", Polarity::Positive}}), (ConfusionCounts{0, 0, 1, 0}));
}

TEST(Confusion, DegenerateRatios) {
  const ConfusionCounts none{0, 0, 0, 7};
  EXPECT_TRUE(precision(none).degenerate);
  EXPECT_TRUE(recall(none).degenerate);
  EXPECT_EQ(precision(none).value, 0.0);
  const EvalReport r = make_report(Setting::Vn, none);
  EXPECT_EQ(r.f1, 0.0);
  EXPECT_TRUE(to_json(r)["degenerate"]["precision"].get<bool>());
}

TEST(Confusion, IdMismatch) {
  const std::vector<Verdict> verdicts = {verdict("a", Label::Positive), verdict("z", Label::Positive)};
  try {
    confusion_from_verdicts(verdicts, {{"a", Polarity::Positive}, {"b", Polarity::Negative}});
    FAIL();
  } catch (const IdMismatchError& e) {
    EXPECT_EQ(e.missing(), std::vector<std::string>{"b"});
    EXPECT_EQ(e.extra(), std::vector<std::string>{"z"});
  }
  const std::vector<Verdict> dup = {verdict("a", Label::Positive), verdict("a", Label::Positive)};
  EXPECT_THROW(confusion_from_verdicts(dup, {{"a", Polarity::Positive}}), IdMismatchError);
}

std::vector<RankedPrediction> ranked(const std::vector<bool>& positives) {
  std::vector<RankedPrediction> out;
  for (std::size_t i = 0; i < positives.size(); ++i) {
    out.push_back({"r" + std::to_string(i), 1.0 - 0.01 * static_cast<double>(i),
                   positives[i] ? Polarity::Positive : Polarity::Negative});
  }
  return out;
}

TEST(AveragePrecision, WorkedExamples) {
  EXPECT_NEAR(average_precision(ranked({true, false, true, false})), (1.0 + 2.0 / 3.0) / 2.0, 1e-12);
  for (std::size_t n = 1; n <= 8; ++n) {
    std::vector<bool> last(n, false);
    last.back() = true;
    EXPECT_NEAR(average_precision(ranked(last)), 1.0 / static_cast<double>(n), 1e-12);
  }
  EXPECT_EQ(average_precision(ranked({true, true, true, false, false})), 1.0);
  EXPECT_THROW(average_precision(ranked({false, false})), Error);
  auto bad = ranked({true});
  bad[0].score = std::nan("");
  EXPECT_THROW(average_precision(bad), Error);
}

TEST(AveragePrecision, RanksByScoreThenId) {
  std::vector<RankedPrediction> ps = {
      {"b", 0.5, Polarity::Negative}, {"a", 0.5, Polarity::Positive}, {"c", 0.9, Polarity::Negative}};
  // Order c, a, b.
  EXPECT_NEAR(average_precision(ps), 0.5, 1e-12);
  std::reverse(ps.begin(), ps.end());
  EXPECT_NEAR(average_precision(ps), 0.5, 1e-12);
}

TEST(AveragePrecision, MatchesOracleOnAllPermutations) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::size_t positives = 1; positives <= n; ++positives) {
      std::vector<bool> labels(n, false);
      std::fill(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(positives), true);
      std::sort(labels.begin(), labels.end());
      do {
        EXPECT_NEAR(average_precision(ranked(labels)), testing::ap_oracle(labels), 1e-12);
      } while (std::next_permutation(labels.begin(), labels.end()));
    }
  }
}

TEST(AveragePrecision, CompositeScore) {
  Verdict pos = verdict("p", Label::Positive, 0.6);
  Verdict neg = verdict("n", Label::Negative, 0.99);
  EXPECT_DOUBLE_EQ(composite_rank_score(pos), 0.8);
  EXPECT_NEAR(composite_rank_score(neg), 0.005, 1e-12);
  EXPECT_GT(composite_rank_score(verdict("p0", Label::Positive, 0.0)),
            composite_rank_score(verdict("n0", Label::Negative, 0.0)) - 1e-12);
  pos.error = pipeline::StageFailure{"detect", "x"};
  EXPECT_LE(composite_rank_score(pos), 0.5);
}

TEST(Settings, Membership) {
  EXPECT_TRUE(in_setting(Language::En, Setting::Eng));
  EXPECT_TRUE(in_setting(Language::Mixed, Setting::Eng));
  EXPECT_FALSE(in_setting(Language::Vi, Setting::Eng));
  EXPECT_FALSE(in_setting(Language::En, Setting::Vn));
  for (Language l : dataset::kLanguages) EXPECT_TRUE(in_setting(l, Setting::EngVn));
  for (Setting s : kSettings) EXPECT_EQ(parse_setting(to_string(s)), s);
  EXPECT_EQ(parse_setting("eng-vn"), Setting::EngVn);
  EXPECT_FALSE(parse_setting("fr"));
}

struct Fixture {
  std::vector<dataset::ManifestEntry> entries = {
      entry("en-pos", Category::VietnamMapWithoutIslands, Language::En),
      entry("vi-pos", Category::VietnamMapWithoutIslands, Language::Vi),
      entry("vi-isl", Category::VietnamMapWithIslands, Language::Vi),
      entry("mix-not", Category::NotMap, Language::Mixed),
      entry("train-pos", Category::VietnamMapWithoutIslands, Language::En, dataset::Split::Train),
  };
  std::vector<Verdict> verdicts = {
      verdict("en-pos", Label::Positive), verdict("vi-pos", Label::Negative),
      verdict("vi-isl", Label::Positive), verdict("mix-not", Label::Negative, 0.1),
      verdict("train-pos", Label::Positive)};
};

TEST(Evaluate, FiltersBySettingAndSplit) {
  const Fixture f;
  const EvalReport all = evaluate(f.verdicts, f.entries, Setting::EngVn);
  EXPECT_EQ(all.counts, (ConfusionCounts{2, 1, 1, 1}));
  const EvalReport eng = evaluate(f.verdicts, f.entries, Setting::Eng);
  EXPECT_EQ(eng.counts, (ConfusionCounts{2, 0, 0, 1}));
  const EvalReport vn = evaluate(f.verdicts, f.entries, Setting::Vn);
  EXPECT_EQ(vn.counts, (ConfusionCounts{0, 1, 1, 1}));
  const EvalReport test = evaluate(f.verdicts, f.entries, Setting::EngVn, dataset::Split::Test);
  EXPECT_EQ(test.counts.total(), 4U);
  ASSERT_TRUE(all.ap);
  ASSERT_TRUE(all.ap_vietnam_map);
  const auto json = to_json(all);
  EXPECT_EQ(json["setting"], "ENG-VN");
  EXPECT_EQ(json["counts"]["tp"], 2);
}

TEST(Evaluate, NoPositivesLeavesApUnset) {
  const std::vector<dataset::ManifestEntry> entries = {entry("n", Category::NotMap, Language::Mixed)};
  const std::vector<Verdict> verdicts = {verdict("n", Label::Negative, 0.0)};
  const EvalReport r = evaluate(verdicts, entries, Setting::EngVn);
  EXPECT_FALSE(r.ap);
  EXPECT_FALSE(r.ap_vietnam_map);
  EXPECT_TRUE(to_json(r)["ap"].is_null());
}

TEST(Evaluate, IdMismatchChecksWholeManifest) {
  Fixture f;
  f.verdicts.pop_back();
  EXPECT_THROW(evaluate(f.verdicts, f.entries, Setting::Vn), IdMismatchError);
}

// A with-islands map whose only landmark text is `text`.
Verdict landmark_verdict(const std::string& id, const std::string& text, const text::MatchPolicy& policy) {
  Verdict v = verdict(id, Label::Negative);
  pipeline::Evidence e;
  e.instance.text = text;
  e.match = text::match_instance(text, policy);
  v.evidence.push_back(e);
  const auto d = pipeline::decide(true, e.match.matched());
  v.label = d.label;
  v.reason = d.reason;
  return v;
}

TEST(LambdaSweep, RedecidesFromEvidence) {
  const auto base = text::MatchPolicy::defaults();
  std::vector<dataset::ManifestEntry> entries;
  std::vector<Verdict> verdicts;
  const std::vector<std::string> texts = {"Hoang Sa", "Hoag Sa", "Trung Sa", "Parcl", "Truong Son"};
  for (std::size_t i = 0; i < texts.size(); ++i) {
    const std::string id = "m" + std::to_string(i);
    entries.push_back(entry(id, Category::VietnamMapWithIslands, Language::Vi));
    verdicts.push_back(landmark_verdict(id, texts[i], base));
  }
  entries.push_back(entry("pos", Category::VietnamMapWithoutIslands, Language::Vi));
  verdicts.push_back(landmark_verdict("pos", "Da Nang", base));
  Verdict not_vn = verdict("nv", Label::Negative, 0.1);
  not_vn.reason = Reason::NotVietnamMap;
  entries.push_back(entry("nv", Category::NotVietnamMap, Language::Mixed));
  verdicts.push_back(not_vn);

  const std::vector<std::size_t> lambdas = {0, 1, 2, 3, 5, 7};
  const auto rows = lambda_sweep(verdicts, entries, lambdas, base);
  ASSERT_EQ(rows.size(), lambdas.size());
  // Distances: 0, 1, 1, 2, 2 to the nearest term; "Da Nang" is 6 away.
  const std::vector<std::size_t> matched = {0, 1, 3, 5, 5, 6};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].lambda, lambdas[i]);
    EXPECT_EQ(rows[i].matched_instances, matched[i]) << lambdas[i];
    EXPECT_EQ(rows[i].landmark_total, 5U);
    if (i > 0) {
      EXPECT_GE(rows[i].matched_instances, rows[i - 1].matched_instances);
    }
  }
  EXPECT_DOUBLE_EQ(rows[2].landmark_recall(), 3.0 / 5.0);
  EXPECT_DOUBLE_EQ(rows[3].landmark_recall(), 1.0);
  EXPECT_EQ(rows[3].report.counts, (ConfusionCounts{1, 0, 0, 6}));
  EXPECT_EQ(rows[5].report.counts, (ConfusionCounts{0, 0, 1, 6}));
  const std::string table = render_sweep_table(rows);
  EXPECT_NE(table.find("Landmark recall"), std::string::npos);
  EXPECT_EQ(sweep_to_json(rows, base)["rows"].size(), lambdas.size());
}

TEST(LambdaSweep, SingleLambdaAndErrorsKept) {
  const auto base = text::MatchPolicy::defaults();
  Verdict failed = verdict("f", Label::Negative);
  failed.reason = Reason::Error;
  failed.error = pipeline::StageFailure{"detect", "x"};
  const std::vector<Verdict> verdicts = {failed};
  const std::vector<dataset::ManifestEntry> entries = {
      entry("f", Category::VietnamMapWithoutIslands, Language::En)};
  const std::vector<std::size_t> one = {4};
  const auto rows = lambda_sweep(verdicts, entries, one, base);
  ASSERT_EQ(rows.size(), 1U);
  EXPECT_EQ(rows[0].report.counts, (ConfusionCounts{0, 0, 1, 0}));
  EXPECT_EQ(redecide(failed, base).reason, Reason::Error);
  EXPECT_EQ(rows[0].landmark_recall(), 0.0);
}

}  // namespace
}  // namespace mapscreen::eval
