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

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <vector>

#include "json.hpp"

#include "dsent/errors.h"

namespace dsent {
namespace {

double ratio(uint64_t num, uint64_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

double f1(double precision, double recall) {
  const double sum = precision + recall;
  return sum == 0.0 ? 0.0 : 2.0 * precision * recall / sum;
}

std::string fixed4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

std::string pad(const std::string& s, size_t width) {
  // Width counts code points so accented dataset names still align.
  size_t cps = 0;
  for (unsigned char c : s) cps += (c & 0xC0) != 0x80;
  return s + std::string(width > cps ? width - cps : 0, ' ');
}

size_t display_width(const std::string& s) {
  size_t cps = 0;
  for (unsigned char c : s) cps += (c & 0xC0) != 0x80;
  return cps;
}

}  // namespace

ConfusionMatrix confusion(std::span<const Polarity> predicted,
                          std::span<const Polarity> gold) {
  if (predicted.size() != gold.size()) {
    throw InvalidArgument("confusion: " + std::to_string(predicted.size()) +
                          " predictions but " + std::to_string(gold.size()) +
                          " gold labels");
  }
  if (predicted.empty()) throw InvalidArgument("confusion: empty input");
  ConfusionMatrix cm;
  for (size_t i = 0; i < predicted.size(); ++i) {
    const bool pred_pos = predicted[i] == Polarity::kPositive;
    const bool gold_pos = gold[i] == Polarity::kPositive;
    if (pred_pos && gold_pos) {
      ++cm.tp;
    } else if (pred_pos) {
      ++cm.fp;
    } else if (gold_pos) {
      ++cm.fn;
    } else {
      ++cm.tn;
    }
  }
  return cm;
}

EvalReport metrics(const ConfusionMatrix& cm, std::string dataset,
                   std::string method) {
  if (cm.total() == 0) throw InvalidArgument("metrics: empty confusion matrix");
  const double pos_precision = ratio(cm.tp, cm.tp + cm.fp);
  const double pos_recall = ratio(cm.tp, cm.tp + cm.fn);
  const double neg_precision = ratio(cm.tn, cm.tn + cm.fn);
  const double neg_recall = ratio(cm.tn, cm.tn + cm.fp);

  EvalReport r;
  r.dataset = std::move(dataset);
  r.method = std::move(method);
  r.confusion = cm;
  r.accuracy = ratio(cm.tp + cm.tn, cm.total());
  r.recall_macro = (pos_recall + neg_recall) / 2.0;
  r.f1_macro = (f1(pos_precision, pos_recall) + f1(neg_precision, neg_recall)) / 2.0;
  return r;
}

std::string render_report(std::span<const EvalReport> reports) {
  std::vector<std::string> datasets;
  for (const auto& r : reports) {
    if (std::find(datasets.begin(), datasets.end(), r.dataset) == datasets.end()) {
      datasets.push_back(r.dataset);
    }
  }
  std::vector<const EvalReport*> rows;
  for (const auto& name : datasets) {
    const size_t first = rows.size();
    for (const auto& r : reports) {
      if (r.dataset == name) rows.push_back(&r);
    }
    std::stable_sort(rows.begin() + first, rows.end(),
                     [](const EvalReport* a, const EvalReport* b) {
                       if (a->f1_macro != b->f1_macro) return a->f1_macro > b->f1_macro;
                       return a->method < b->method;
                     });
  }

  size_t dataset_w = display_width("Dataset");
  size_t method_w = display_width("Method");
  for (const auto* r : rows) {
    dataset_w = std::max(dataset_w, display_width(r->dataset));
    method_w = std::max(method_w, display_width(r->method));
  }
  std::string out = pad("Dataset", dataset_w + 2) + pad("Method", method_w + 2) +
                    pad("F1", 8) + pad("Recall", 8) + "Accuracy\n";
  std::string last_dataset;
  for (const auto* r : rows) {
    const bool first_row = r->dataset != last_dataset;
    last_dataset = r->dataset;
    out += pad(first_row ? r->dataset : "", dataset_w + 2);
    out += pad(r->method, method_w + 2);
    out += pad(fixed4(r->f1_macro), 8);
    out += pad(fixed4(r->recall_macro), 8);
    out += fixed4(r->accuracy);
    out += '\n';
  }
  return out;
}

std::string report_record(const EvalReport& r) {
  nlohmann::ordered_json j;
  j["dataset"] = r.dataset;
  j["method"] = r.method;
  j["f1_macro"] = r.f1_macro;
  j["recall_macro"] = r.recall_macro;
  j["accuracy"] = r.accuracy;
  j["tp"] = r.confusion.tp;
  j["fp"] = r.confusion.fp;
  j["tn"] = r.confusion.tn;
  j["fn"] = r.confusion.fn;
  return j.dump();
}

void write_report_records(std::span<const EvalReport> reports, std::ostream& out) {
  for (const auto& r : reports) out << report_record(r) << '\n';
}

}  // namespace dsent
