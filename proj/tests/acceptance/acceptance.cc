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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dsent/cli.h"
#include "dsent/eval.h"
#include "dsent/features.h"
#include "dsent/hybrid.h"
#include "dsent/labeler.h"
#include "dsent/lexical.h"
#include "dsent/lexicon.h"
#include "dsent/logistic.h"
#include "dsent/tokenizer.h"
#include "dsent/utf8.h"
#include "json.hpp"
#include "oracles.h"
#include "synthetic.h"
#include "test_util.h"

namespace dsent {
namespace {

using testing::uniform;
using testing::uniform_real;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* format, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b, c);
  return buf;
}

// 1
Outcome golden_preprocessing() {
  const auto start = Clock::now();
  const std::string got = detokenize(
      tokenize("hj tenho aula de manhã, tarde e noite. das 8h ate 19h :(( #cansado"));
  const std::string want =
      "hj tenho aula de manhã tarde e noite das NUMBER ate NUMBER :(( HASHTAG";
  const double t = seconds_since(start);
  return {got == want && t < 1.0, "\"" + got + "\"" + fmt(" in %.3fs", t)};
}

// 2
Outcome golden_marker_lexicon() {
  const auto& lex = default_marker_lexicon();
  const bool ok =
      lex.positive_emoticons() == std::set<std::string>{":)", ":-)", ":D", "=)"} &&
      lex.negative_emoticons() == std::set<std::string>{":(", ":-("} &&
      lex.positive_emojis() == std::set<char32_t>{0x1F60A, 0x1F60B, 0x1F60D, 0x1F603,
                                                  0x1F606, 0x1F600, 0x1F61D} &&
      lex.negative_emojis() == std::set<char32_t>{0x1F620, 0x1F627, 0x1F61E, 0x1F628,
                                                  0x1F626, 0x1F623, 0x1F614, 0x1F629,
                                                  0x1F612, 0x1F621, 0x2639, 0x1F61F};
  return {ok, fmt("%.0f/%.0f emoticons, ", lex.positive_emoticons().size(),
                  lex.negative_emoticons().size()) +
                  fmt("%.0f/%.0f emojis", lex.positive_emojis().size(),
                      lex.negative_emojis().size())};
}

Token random_token(std::mt19937_64& rng) {
  static const std::vector<std::string> kWords = {"bom", "dia", "ruim", "oi", "manhã"};
  static const std::vector<char32_t> kEmojis = {0x1F60A, 0x1F600, 0x1F61D, 0x1F621, 0x2639,
                                                0x1F614, 0x1F44D, 0x1F389, 0x1F602};
  static const auto kEmoticons = default_emoticon_inventory();
  Token t;
  switch (uniform(rng, 5)) {
    case 0: {
      const auto& e = kEmoticons[uniform(rng, kEmoticons.size())];
      t.kind = TokenKind::kEmoticon;
      t.canonical = e;
      t.surface = e + std::string(uniform(rng, 3), e.back());
      return t;
    }
    case 1:
      t.kind = TokenKind::kEmoji;
      t.surface = t.canonical = encode_utf8(kEmojis[uniform(rng, kEmojis.size())]);
      return t;
    case 2:
      return Token::placeholder(uniform(rng, 2) ? kUrlTag : kNumberTag);
    default:
      return Token::word(kWords[uniform(rng, kWords.size())]);
  }
}

// 3
Outcome labeling_oracle() {
  const auto start = Clock::now();
  std::mt19937_64 rng(3);
  const auto& lex = default_marker_lexicon();
  size_t disagreements = 0;
  for (int i = 0; i < 10000; ++i) {
    TokenizedDocument doc{std::to_string(i), {}};
    for (size_t n = uniform(rng, 10); n > 0; --n) doc.tokens.push_back(random_token(rng));
    const auto want = testing::brute_force_label(doc.tokens, lex);
    const auto got = label_document(doc, lex);
    bool same;
    if (const auto* kept = std::get_if<LabeledDocument>(&got)) {
      same = want.label == kept->polarity && !want.reason && want.survivors == kept->tokens;
    } else {
      same = !want.label && want.reason == std::get<DiscardReason>(got);
    }
    disagreements += !same;
  }
  const double t = seconds_since(start);
  return {disagreements == 0 && t < 10.0,
          fmt("%.0f disagreements over 10000 sequences in %.2fs", disagreements, t)};
}

// 4
Outcome tfidf_oracle() {
  std::mt19937_64 rng(4);
  double worst = 0.0;
  bool vocab_ok = true;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::vector<std::string>> corpus(1 + uniform(rng, 20));
    for (auto& doc : corpus) {
      for (size_t n = uniform(rng, 11); n > 0; --n) {
        doc.push_back("w" + std::to_string(uniform(rng, 12)));
      }
    }
    corpus.front().push_back("w0");
    corpus.back().push_back("w0");
    const uint64_t min_df = corpus.size() > 1 ? 1 + uniform(rng, 2) : 1;
    const auto model = fit_tfidf(corpus, min_df);
    const auto oracle = testing::brute_force_tfidf(corpus, min_df);
    vocab_ok = vocab_ok && model.vocabulary.terms() == oracle.terms;
    if (!vocab_ok) break;
    for (size_t t = 0; t < oracle.idf.size(); ++t) {
      worst = std::max(worst, std::abs(model.idf[t] - oracle.idf[t]));
    }
    for (size_t d = 0; d < corpus.size(); ++d) {
      const auto row = transform_tfidf(model, corpus[d]).to_dense();
      for (size_t t = 0; t < row.size(); ++t) {
        worst = std::max(worst, std::abs(row[t] - oracle.rows[d][t]));
      }
    }
  }
  return {vocab_ok && worst <= 1e-9, fmt("max abs deviation %.3g over 20 corpora", worst)};
}

// 5
Outcome gradient_check() {
  std::mt19937_64 rng(5);
  double worst = 0.0;
  for (int draw = 0; draw < 100; ++draw) {
    const size_t n = 1 + uniform(rng, 8);
    std::vector<SparseVector> x;
    std::vector<Polarity> y;
    for (size_t i = 0; i < n; ++i) {
      std::vector<double> dense(10);
      for (auto& v : dense) v = uniform_real(rng, -2, 2);
      x.push_back(SparseVector::from_dense(dense));
      y.push_back(uniform(rng, 2) ? Polarity::kPositive : Polarity::kNegative);
    }
    LogisticModel model;
    model.weights.resize(10);
    for (auto& w : model.weights) w = uniform_real(rng, -1, 1);
    model.bias = uniform_real(rng, -1, 1);
    const double l2 = uniform_real(rng, 0, 0.1);
    std::vector<double> gw;
    double gb = 0;
    logistic_gradient(model, x, y, l2, &gw, &gb);
    const double h = 1e-5;
    for (size_t k = 0; k <= 10; ++k) {
      auto plus = model, minus = model;
      (k < 10 ? plus.weights[k] : plus.bias) += h;
      (k < 10 ? minus.weights[k] : minus.bias) -= h;
      const double numeric = (logistic_objective(plus, x, y, l2) -
                              logistic_objective(minus, x, y, l2)) /
                             (2 * h);
      const double analytic = k < 10 ? gw[k] : gb;
      worst = std::max(worst, std::abs(numeric - analytic) /
                                  std::max(1e-8, std::abs(numeric) + std::abs(analytic)));
    }
  }
  return {worst < 1e-5, fmt("max relative error %.3g over 100 draws", worst)};
}

// 6
Outcome metric_oracle() {
  std::mt19937_64 rng(6);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    ConfusionMatrix m{uniform(rng, 500), uniform(rng, 500), uniform(rng, 500),
                      uniform(rng, 500)};
    if (m.total() == 0) m.tn = 1;
    const auto got = metrics(m);
    const auto want = testing::brute_force_metrics(m.tp, m.fp, m.tn, m.fn);
    worst = std::max({worst, std::abs(got.accuracy - want.accuracy),
                      std::abs(got.recall_macro - want.recall_macro),
                      std::abs(got.f1_macro - want.f1_macro)});
  }
  const auto perfect = metrics({7, 0, 5, 0});
  const auto balanced = metrics({1, 1, 1, 1});
  const auto all_pos = metrics({2, 2, 0, 0});
  const bool hand = perfect.accuracy == 1.0 && perfect.recall_macro == 1.0 &&
                    perfect.f1_macro == 1.0 && balanced.accuracy == 0.5 &&
                    balanced.recall_macro == 0.5 && balanced.f1_macro == 0.5 &&
                    all_pos.accuracy == 0.5 && all_pos.recall_macro == 0.5 &&
                    std::abs(all_pos.f1_macro - 1.0 / 3.0) < 1e-15;
  return {worst <= 1e-12 && hand,
          fmt("max deviation %.3g over 10000 matrices; hand cases %s", worst) +
              (hand ? "ok" : "wrong")};
}

// 7
Outcome lexical_rules() {
  const auto& lex = default_sentiment_lexicon();
  const std::vector<std::pair<std::vector<std::string>, double>> cases = {
      {{"bom"}, 1.0},
      {{"muito", "bom"}, 3.0},
      {{"não", "bom"}, -1.0},
      {{"não", "muito", "bom"}, 1.0 / 3.0}};
  std::string detail;
  bool ok = true;
  for (const auto& [words, want] : cases) {
    const double got = lexical_score(words, lex);
    ok = ok && std::abs(got - want) <= 1e-12;
    detail += fmt("%.6g ", got);
  }
  return {ok, "scores " + detail};
}

// 8
Outcome hybrid_partition() {
  std::mt19937_64 rng(8);
  size_t violations = 0;
  for (int i = 0; i < 10000; ++i) {
    const double c = i % 100 == 0 ? 0.5 : uniform_real(rng, 0, 1);
    const Prediction base{uniform(rng, 2) ? Polarity::kPositive : Polarity::kNegative, c,
                          {}};
    const Prediction lexical{uniform(rng, 2) ? Polarity::kPositive : Polarity::kNegative,
                             uniform_real(rng, 0, 2), {}};
    const auto out = hybrid_classify(base, [&] { return lexical; });
    violations += !(c >= 0.5 ? out == base : out == lexical);
  }
  return {violations == 0, fmt("%.0f violations over 10000 triples", violations)};
}

struct PipelineRun {
  bool ok = false;
  std::string error;
  std::map<std::string, uint64_t> stats;
  nlohmann::json report;
  double seconds = 0;
};

int cli(const std::vector<std::string>& args, std::string* out, std::string* err) {
  std::istringstream in;
  std::ostringstream o, e;
  const int code = run_cli(args, in, o, e);
  *out = o.str();
  *err = e.str();
  return code;
}

// build-corpus -> train -> evaluate inside `dir`, with fixed relative file
// names so artifacts from two runs are comparable.
PipelineRun run_pipeline(const std::filesystem::path& dir,
                         const testing::SyntheticData& data) {
  PipelineRun run;
  const auto start = Clock::now();
  const auto p = [&](const char* name) { return (dir / name).string(); };
  {
    std::string raw, heldout;
    for (const auto& m : data.raw_messages) raw += m + "\n";
    for (const auto& h : data.heldout_lines) heldout += h + "\n";
    testing::write_file(p("raw.txt"), raw);
    testing::write_file(p("heldout.tsv"), heldout);
  }
  std::string out, err;
  if (cli({"build-corpus", "--input", p("raw.txt"), "--output", p("corpus.tsv")}, &out,
          &err) != 0) {
    run.error = "build-corpus: " + err;
    return run;
  }
  std::istringstream lines(out);
  std::string line;
  while (std::getline(lines, line)) {
    const auto tab = line.find('\t');
    if (line.empty() || line[0] == '#' || tab == std::string::npos) continue;
    run.stats[line.substr(0, tab)] = std::stoull(line.substr(tab + 1));
  }
  if (cli({"train", "--corpus", p("corpus.tsv"), "--repr", "tfidf", "--model-out",
           p("model.bin"), "--seed", "42"},
          &out, &err) != 0) {
    run.error = "train: " + err;
    return run;
  }
  if (cli({"evaluate", "--model", p("model.bin"), "--dataset", p("heldout.tsv"),
           "--records", p("report.jsonl")},
          &out, &err) != 0) {
    run.error = "evaluate: " + err;
    return run;
  }
  testing::write_file(p("report.txt"), out);
  run.report = nlohmann::json::parse(testing::read_file(p("report.jsonl")));
  run.seconds = seconds_since(start);
  run.ok = true;
  return run;
}

// 9 and 10
std::pair<Outcome, Outcome> synthetic_pipeline() {
  testing::SyntheticConfig config;
  config.seed = 42;
  const auto data = testing::generate_synthetic(config);
  testing::TempDir dir;

  const auto first = run_pipeline(dir.path(), data);
  if (!first.ok) return {{false, first.error}, {false, "first run failed"}};
  std::map<std::string, std::string> artifacts;
  for (const char* name : {"corpus.tsv", "model.bin", "report.jsonl", "report.txt"}) {
    artifacts[name] = testing::read_file((dir.path() / name).string());
  }

  const auto& s = first.stats;
  const auto& t = data.truth;
  const auto get = [&](const char* key) {
    const auto it = s.find(key);
    return it == s.end() ? ~uint64_t{0} : it->second;
  };
  const bool counts = get("kept_positive") == t.positive &&
                      get("kept_negative") == t.negative &&
                      get("discarded_mixed") == t.mixed &&
                      get("discarded_no_marker") == t.no_marker &&
                      get("discarded_too_short") == t.too_short &&
                      get("total_seen") == data.raw_messages.size();
  const double acc = first.report["accuracy"].get<double>();
  const double f1 = first.report["f1_macro"].get<double>();
  const bool ok9 = counts && acc >= 0.95 && std::abs(f1 - acc) <= 0.02 &&
                   first.seconds < 120.0;
  std::string detail9 =
      std::string("discard counts ") + (counts ? "match" : "MISMATCH") +
      fmt(" (mixed %.0f, no_marker %.0f, ", static_cast<double>(get("discarded_mixed")),
          static_cast<double>(get("discarded_no_marker"))) +
      fmt("too_short %.0f); held-out accuracy %.4f, macro-F1 %.4f",
          static_cast<double>(get("discarded_too_short")), acc, f1) +
      fmt(" in %.1fs", first.seconds);

  const auto second = run_pipeline(dir.path(), data);
  if (!second.ok) return {{ok9, detail9}, {false, second.error}};
  std::string differing;
  for (const auto& [name, bytes] : artifacts) {
    if (testing::read_file((dir.path() / name).string()) != bytes) {
      differing += " " + name;
    }
  }
  return {{ok9, detail9},
          {differing.empty(), differing.empty()
                                  ? "corpus, model and report byte-identical across runs"
                                  : "differs:" + differing}};
}

}  // namespace
}  // namespace dsent

int main() {
  using namespace dsent;
  std::vector<std::pair<std::string, Outcome>> results;
  results.emplace_back("preprocessing golden example", golden_preprocessing());
  results.emplace_back("marker lexicon golden sets", golden_marker_lexicon());
  results.emplace_back("labeling agrees with brute-force scan", labeling_oracle());
  results.emplace_back("tf-idf agrees with dense oracle", tfidf_oracle());
  results.emplace_back("logistic gradient check", gradient_check());
  results.emplace_back("metrics agree with per-class oracle", metric_oracle());
  results.emplace_back("lexical rule sequences", lexical_rules());
  results.emplace_back("hybrid partition property", hybrid_partition());
  auto [pipeline, determinism] = synthetic_pipeline();
  results.emplace_back("synthetic end-to-end pipeline", pipeline);
  results.emplace_back("pipeline determinism", determinism);

  int failures = 0;
  for (size_t i = 0; i < results.size(); ++i) {
    const auto& [name, outcome] = results[i];
    std::printf("[%s] %2zu. %s: %s\n", outcome.pass ? "PASS" : "FAIL", i + 1, name.c_str(),
                outcome.detail.c_str());
    failures += !outcome.pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failures,
              results.size());
  return failures == 0 ? 0 : 1;
}
