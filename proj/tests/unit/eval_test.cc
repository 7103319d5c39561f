// Copyright 2026 The dsent Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dsent/eval.h"

#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "dsent/errors.h"
#include "json.hpp"
#include "oracles.h"

namespace dsent {
namespace {

constexpr Polarity P = Polarity::kPositive;
constexpr Polarity N = Polarity::kNegative;

ConfusionMatrix cm(std::vector<Polarity> pred, std::vector<Polarity> gold) {
  return confusion(pred, gold);
}

TEST(ConfusionTest, Examples) {
  EXPECT_EQ(cm({P, N, P}, {P, N, P}), (ConfusionMatrix{2, 0, 1, 0}));
  EXPECT_EQ(cm({P, P}, {N, N}), (ConfusionMatrix{0, 2, 0, 0}));
  EXPECT_EQ(cm({P, N, N, P}, {P, P, N, N}), (ConfusionMatrix{1, 1, 1, 1}));
  EXPECT_THROW(cm({P}, {P, N}), InvalidArgument);
  EXPECT_THROW(cm({}, {}), InvalidArgument);
}

TEST(MetricsTest, HandComputedCases) {
  const auto perfect = metrics({5, 0, 3, 0});
  EXPECT_EQ(perfect.f1_macro, 1.0);
  EXPECT_EQ(perfect.recall_macro, 1.0);
  EXPECT_EQ(perfect.accuracy, 1.0);

  const auto balanced = metrics({1, 1, 1, 1});
  EXPECT_EQ(balanced.accuracy, 0.5);
  EXPECT_EQ(balanced.recall_macro, 0.5);
  EXPECT_EQ(balanced.f1_macro, 0.5);

  const auto all_pos = metrics(cm({P, P, P, P}, {P, P, N, N}));
  EXPECT_EQ(all_pos.accuracy, 0.5);
  EXPECT_EQ(all_pos.recall_macro, 0.5);
  EXPECT_NEAR(all_pos.f1_macro, 1.0 / 3.0, 1e-15);

  EXPECT_THROW(metrics({}), InvalidArgument);
  const auto named = metrics({1, 0, 0, 0}, "d", "m");
  EXPECT_EQ(named.dataset, "d");
  EXPECT_EQ(named.method, "m");
  EXPECT_EQ(named.confusion, (ConfusionMatrix{1, 0, 0, 0}));
}

TEST(MetricsProperty, MatchesOracleAndIsSymmetric) {
  std::mt19937_64 rng(2718);
  for (int i = 0; i < 10000; ++i) {
    ConfusionMatrix m;
    const uint64_t scale = i % 4 == 0 ? 3 : 200;
    m.tp = testing::uniform(rng, scale);
    m.fp = testing::uniform(rng, scale);
    m.tn = testing::uniform(rng, scale);
    m.fn = testing::uniform(rng, scale);
    if (m.total() == 0) m.tp = 1;
    const auto got = metrics(m);
    const auto want = testing::brute_force_metrics(m.tp, m.fp, m.tn, m.fn);
    ASSERT_NEAR(got.accuracy, want.accuracy, 1e-12);
    ASSERT_NEAR(got.recall_macro, want.recall_macro, 1e-12);
    ASSERT_NEAR(got.f1_macro, want.f1_macro, 1e-12);
    const auto swapped = metrics(m.swapped());
    ASSERT_NEAR(swapped.accuracy, got.accuracy, 1e-15);
    ASSERT_NEAR(swapped.recall_macro, got.recall_macro, 1e-15);
    ASSERT_NEAR(swapped.f1_macro, got.f1_macro, 1e-15);
    ASSERT_EQ(got.accuracy == 1.0, m.fp == 0 && m.fn == 0);
    for (double v : {got.accuracy, got.recall_macro, got.f1_macro}) {
      ASSERT_GE(v, 0.0);
      ASSERT_LE(v, 1.0);
    }
  }
}

EvalReport row(const std::string& dataset, const std::string& method, double f1,
               double recall, double acc) {
  EvalReport r;
  r.dataset = dataset;
  r.method = method;
  r.f1_macro = f1;
  r.recall_macro = recall;
  r.accuracy = acc;
  return r;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

std::vector<std::string> fields(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string f;
  while (in >> f) out.push_back(f);
  return out;
}

TEST(RenderReportTest, SingleRow) {
  const std::vector<EvalReport> reports = {
      row("BPE-Dilma", "LR + tfidf", 0.6477, 0.6443, 0.7128)};
  const auto lines = lines_of(render_report(reports));
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(fields(lines[0]),
            (std::vector<std::string>{"Dataset", "Method", "F1", "Recall", "Accuracy"}));
  EXPECT_EQ(fields(lines[1]), (std::vector<std::string>{"BPE-Dilma", "LR", "+", "tfidf",
                                                        "0.6477", "0.6443", "0.7128"}));
  // Columns line up with the header.
  EXPECT_EQ(lines[0].find("F1"), lines[1].find("0.6477"));
}

TEST(RenderReportTest, EmptyIsHeaderOnly) {
  const auto lines = lines_of(render_report({}));
  ASSERT_EQ(lines.size(), 1u);
  EXPECT_EQ(fields(lines[0]).front(), "Dataset");
}

TEST(RenderReportTest, RankingAndTies) {
  const std::vector<EvalReport> reports = {
      row("B", "zeta", 0.5, 0.5, 0.5),     row("A", "beta", 0.7, 0.7, 0.7),
      row("B", "alpha", 0.5, 0.5, 0.5),    row("A", "gamma", 0.9, 0.9, 0.9),
      row("B", "omega", 0.8, 0.8, 0.8)};
  const auto lines = lines_of(render_report(reports));
  ASSERT_EQ(lines.size(), 6u);
  EXPECT_EQ(fields(lines[1]), (std::vector<std::string>{"B", "omega", "0.8000", "0.8000", "0.8000"}));
  EXPECT_EQ(fields(lines[2])[0], "alpha");
  EXPECT_EQ(fields(lines[3])[0], "zeta");
  EXPECT_EQ(fields(lines[4])[0], "A");
  EXPECT_EQ(fields(lines[4])[1], "gamma");
  EXPECT_EQ(fields(lines[5])[0], "beta");
}

TEST(ReportRecordTest, FieldsAndOrder) {
  auto r = metrics({3, 1, 4, 2}, "corpus", "LR + tfidf");
  const auto line = report_record(r);
  EXPECT_EQ(line.find('\n'), std::string::npos);
  EXPECT_EQ(line.rfind("{\"dataset\":\"corpus\",\"method\":\"LR + tfidf\",\"f1_macro\":", 0),
            0u);
  const auto j = nlohmann::json::parse(line);
  EXPECT_EQ(j["tp"], 3);
  EXPECT_EQ(j["fp"], 1);
  EXPECT_EQ(j["tn"], 4);
  EXPECT_EQ(j["fn"], 2);
  EXPECT_EQ(j["accuracy"].get<double>(), r.accuracy);
  EXPECT_EQ(j["f1_macro"].get<double>(), r.f1_macro);
  EXPECT_EQ(j["recall_macro"].get<double>(), r.recall_macro);

  std::ostringstream out;
  const std::vector<EvalReport> two = {r, r};
  write_report_records(two, out);
  EXPECT_EQ(out.str(), line + "\n" + line + "\n");
}

}  // namespace
}  // namespace dsent
