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

#include "dsent/logistic.h"

#include <cmath>
#include <numeric>
#include <random>

#include "dsent/errors.h"

namespace dsent {
namespace {

double target(Polarity p) { return p == Polarity::kPositive ? 1.0 : 0.0; }

// log(1 + e^z) without overflow.
double softplus(double z) {
  return z > 0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z));
}

void check_dimension(const LogisticModel& model, size_t dim) {
  if (dim != model.dimension()) {
    throw InvalidArgument("feature dimension " + std::to_string(dim) +
                          " does not match model dimension " +
                          std::to_string(model.dimension()));
  }
}

void validate_training_data(std::span<const SparseVector> x,
                            std::span<const Polarity> y) {
  if (x.size() != y.size()) {
    throw InvalidArgument("train_logistic: " + std::to_string(x.size()) +
                          " rows but " + std::to_string(y.size()) + " labels");
  }
  if (x.size() < 2) throw InvalidArgument("train_logistic: need at least 2 rows");
  bool has_pos = false;
  bool has_neg = false;
  for (Polarity p : y) (p == Polarity::kPositive ? has_pos : has_neg) = true;
  if (!has_pos || !has_neg) {
    throw InvalidArgument("train_logistic: training data has a single class");
  }
  for (const auto& row : x) {
    if (row.dimension != x[0].dimension) {
      throw InvalidArgument("train_logistic: inconsistent feature dimensions");
    }
  }
}

}  // namespace

double sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

double decision_value(const LogisticModel& model, const SparseVector& x) {
  return x.dot(model.weights) + model.bias;
}

double logistic_objective(const LogisticModel& model,
                          std::span<const SparseVector> x,
                          std::span<const Polarity> y, double l2) {
  double loss = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    const double z = decision_value(model, x[i]);
    loss += softplus(z) - target(y[i]) * z;
  }
  loss /= static_cast<double>(x.size());
  double sq = 0.0;
  for (double w : model.weights) sq += w * w;
  return loss + 0.5 * l2 * sq;
}

void logistic_gradient(const LogisticModel& model,
                       std::span<const SparseVector> x,
                       std::span<const Polarity> y, double l2,
                       std::vector<double>* grad_weights, double* grad_bias) {
  const double n = static_cast<double>(x.size());
  grad_weights->assign(model.dimension(), 0.0);
  *grad_bias = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    const double residual = sigmoid(decision_value(model, x[i])) - target(y[i]);
    for (size_t k = 0; k < x[i].nnz(); ++k) {
      (*grad_weights)[x[i].indices[k]] += residual * x[i].values[k] / n;
    }
    *grad_bias += residual / n;
  }
  for (size_t j = 0; j < model.dimension(); ++j) {
    (*grad_weights)[j] += l2 * model.weights[j];
  }
}

LogisticModel train_logistic(std::span<const SparseVector> x,
                             std::span<const Polarity> y,
                             const TrainOptions& options, TrainReport* report,
                             const EpochCallback& on_epoch) {
  validate_training_data(x, y);
  if (options.batch_size == 0) throw InvalidArgument("batch_size must be >= 1");

  LogisticModel model;
  model.meta = options;
  model.weights.assign(x[0].dimension, 0.0);
  const size_t n = x.size();
  const size_t dim = model.dimension();

  double loss = logistic_objective(model, x, y, options.l2_strength);
  if (report) report->loss.assign(1, loss);

  std::mt19937_64 rng(options.seed);
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), size_t{0});
  std::vector<double> grad(dim, 0.0);
  std::vector<uint32_t> touched;
  std::vector<char> is_touched(dim, 0);

  uint64_t step = 0;
  double step_scale = 1.0;
  std::vector<double> saved_weights;
  for (uint32_t epoch = 0; epoch < options.epochs; ++epoch) {
    saved_weights = model.weights;
    const double saved_bias = model.bias;
    // Fisher-Yates with raw engine output keeps the order identical across
    // standard library implementations.
    for (size_t i = n - 1; i > 0; --i) {
      std::swap(order[i], order[rng() % (i + 1)]);
    }
    for (size_t start = 0; start < n; start += options.batch_size) {
      const double lr =
          step_scale * options.learning_rate / std::sqrt(static_cast<double>(++step));
      const size_t end = std::min(n, start + options.batch_size);
      const double batch = static_cast<double>(end - start);
      double grad_bias = 0.0;
      for (size_t b = start; b < end; ++b) {
        const SparseVector& row = x[order[b]];
        const double residual =
            sigmoid(decision_value(model, row)) - target(y[order[b]]);
        for (size_t k = 0; k < row.nnz(); ++k) {
          const uint32_t j = row.indices[k];
          if (!is_touched[j]) {
            is_touched[j] = 1;
            touched.push_back(j);
          }
          grad[j] += residual * row.values[k];
        }
        grad_bias += residual;
      }
      if (options.l2_strength != 0.0) {
        const double decay = 1.0 - lr * options.l2_strength * batch;
        for (double& w : model.weights) w *= decay;
      }
      for (uint32_t j : touched) {
        model.weights[j] -= lr * grad[j];
        grad[j] = 0.0;
        is_touched[j] = 0;
      }
      touched.clear();
      model.bias -= lr * grad_bias;
    }

    // An epoch that raises the full objective is undone and later steps are
    // halved.
    const double epoch_loss = logistic_objective(model, x, y, options.l2_strength);
    if (epoch_loss > loss) {
      model.weights.swap(saved_weights);
      model.bias = saved_bias;
      step_scale *= 0.5;
    } else {
      loss = epoch_loss;
    }
    if (report) report->loss.push_back(loss);
    if (on_epoch) on_epoch(epoch + 1, loss);
  }
  return model;
}

LogisticModel train_logistic(std::span<const std::vector<double>> x,
                             std::span<const Polarity> y,
                             const TrainOptions& options, TrainReport* report,
                             const EpochCallback& on_epoch) {
  std::vector<SparseVector> rows;
  rows.reserve(x.size());
  for (const auto& row : x) rows.push_back(SparseVector::from_dense(row));
  return train_logistic(rows, y, options, report, on_epoch);
}

Prediction predict_logistic(const LogisticModel& model, const SparseVector& x) {
  check_dimension(model, x.dimension);
  const double z = decision_value(model, x);
  Prediction p;
  p.label = z >= 0 ? Polarity::kPositive : Polarity::kNegative;
  p.confidence = std::abs(z);
  double prob = sigmoid(z);
  // Keep label and probability consistent when |z| is below rounding.
  if (z < 0 && prob >= 0.5) prob = std::nextafter(0.5, 0.0);
  p.probability = prob;
  return p;
}

Prediction predict_logistic(const LogisticModel& model,
                            std::span<const double> x) {
  check_dimension(model, x.size());
  return predict_logistic(model, SparseVector::from_dense(x));
}

}  // namespace dsent
