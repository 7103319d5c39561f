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

#ifndef DSENT_PREDICTION_H_
#define DSENT_PREDICTION_H_

#include <optional>

#include "dsent/polarity.h"

namespace dsent {

// Output of any binary classifier. `confidence` is the absolute decision
// value; `probability` is the positive-class probability for models that
// define one.
struct Prediction {
  Polarity label = Polarity::kPositive;
  double confidence = 0.0;
  std::optional<double> probability;

  friend bool operator==(const Prediction&, const Prediction&) = default;
};

}  // namespace dsent

#endif  // DSENT_PREDICTION_H_
