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

#ifndef DSENT_LOGISTIC_H_
#define DSENT_LOGISTIC_H_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "dsent/features.h"
#include "dsent/polarity.h"
#include "dsent/prediction.h"

namespace dsent {

struct TrainOptions {
  uint64_t seed = 42;
  uint32_t epochs = 5;
  uint32_t batch_size = 64;
  // Per-example step size at update t (counted from 1) is
  // learning_rate / sqrt(t); each mini-batch update sums the per-example
  // gradients.
  double learning_rate = 0.1;
  double l2_strength = 1e-5;

  friend bool operator==(const TrainOptions&, const TrainOptions&) = default;
};

struct LogisticModel {
  std::vector<double> weights;
  double bias = 0.0;
  TrainOptions meta;

  size_t dimension() const { return weights.size(); }
};

// Called after every epoch with the full-training-set objective.
using EpochCallback = std::function<void(uint32_t epoch, double loss)>;

struct TrainReport {
  // Objective before training followed by the value after each epoch.
  std::vector<double> loss;
};

double sigmoid(double z);

// Regularized objective: mean log loss + l2/2 * |w|^2 (bias unpenalized).
double logistic_objective(const LogisticModel& model,
                          std::span<const SparseVector> x,
                          std::span<const Polarity> y, double l2);

// Analytic gradient of logistic_objective.
void logistic_gradient(const LogisticModel& model,
                       std::span<const SparseVector> x,
                       std::span<const Polarity> y, double l2,
                       std::vector<double>* grad_weights, double* grad_bias);

// Mini-batch SGD, single-threaded and deterministic for a fixed seed. An
// epoch that would raise the full training objective is rolled back and the
// step size halved, so the objective never increases between epochs.
// Throws InvalidArgument on fewer than two rows, a single class, or
// inconsistent dimensions.
LogisticModel train_logistic(std::span<const SparseVector> x,
                             std::span<const Polarity> y,
                             const TrainOptions& options = {},
                             TrainReport* report = nullptr,
                             const EpochCallback& on_epoch = {});
LogisticModel train_logistic(std::span<const std::vector<double>> x,
                             std::span<const Polarity> y,
                             const TrainOptions& options = {},
                             TrainReport* report = nullptr,
                             const EpochCallback& on_epoch = {});

double decision_value(const LogisticModel& model, const SparseVector& x);

// label = Positive iff w.x + b >= 0; confidence = |w.x + b|.
// Throws InvalidArgument on a dimension mismatch.
Prediction predict_logistic(const LogisticModel& model, const SparseVector& x);
Prediction predict_logistic(const LogisticModel& model,
                            std::span<const double> x);

}  // namespace dsent

#endif  // DSENT_LOGISTIC_H_
