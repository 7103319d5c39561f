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

#ifndef DSENT_HYBRID_H_
#define DSENT_HYBRID_H_

#include <functional>

#include "dsent/prediction.h"

namespace dsent {

struct HybridConfig {
  double margin_threshold = 0.5;
};

// Keeps `base` when base.confidence >= margin_threshold, otherwise defers to
// the lexical classifier. `lexical` is only invoked on deferral.
// Throws InvalidArgument if margin_threshold <= 0.
Prediction hybrid_classify(const Prediction& base,
                           const std::function<Prediction()>& lexical,
                           const HybridConfig& cfg = {});

}  // namespace dsent

#endif  // DSENT_HYBRID_H_
