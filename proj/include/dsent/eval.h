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

#ifndef DSENT_EVAL_H_
#define DSENT_EVAL_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>

#include "dsent/polarity.h"

namespace dsent {

// Positive is the "positive" class.
struct ConfusionMatrix {
  uint64_t tp = 0;
  uint64_t fp = 0;
  uint64_t tn = 0;
  uint64_t fn = 0;

  uint64_t total() const { return tp + fp + tn + fn; }
  // The same matrix with Negative taken as the positive class.
  ConfusionMatrix swapped() const { return {tn, fn, tp, fp}; }

  friend bool operator==(const ConfusionMatrix&, const ConfusionMatrix&) = default;
};

struct EvalReport {
  std::string dataset;
  std::string method;
  double f1_macro = 0.0;
  double recall_macro = 0.0;
  double accuracy = 0.0;
  ConfusionMatrix confusion;
};

// Throws InvalidArgument on length mismatch or empty input.
ConfusionMatrix confusion(std::span<const Polarity> predicted,
                          std::span<const Polarity> gold);

// Macro averages are unweighted means over the two classes; F1 is averaged
// per class. 0/0 precision or recall counts as 0.
// Throws InvalidArgument on an empty matrix.
EvalReport metrics(const ConfusionMatrix& cm, std::string dataset = {},
                   std::string method = {});

// Aligned plain-text table, one row per (dataset, method). Datasets keep
// their first-appearance order; within a dataset rows are sorted by F1
// descending, ties broken by method name.
std::string render_report(std::span<const EvalReport> reports);

// One JSON object per line with fields dataset, method, f1_macro,
// recall_macro, accuracy, tp, fp, tn, fn.
std::string report_record(const EvalReport& report);
void write_report_records(std::span<const EvalReport> reports, std::ostream& out);

}  // namespace dsent

#endif  // DSENT_EVAL_H_
