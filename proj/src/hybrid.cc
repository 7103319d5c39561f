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

#include "dsent/hybrid.h"

#include "dsent/errors.h"

namespace dsent {

Prediction hybrid_classify(const Prediction& base,
                           const std::function<Prediction()>& lexical,
                           const HybridConfig& cfg) {
  if (!(cfg.margin_threshold > 0)) {
    throw InvalidArgument("hybrid margin threshold must be > 0");
  }
  if (base.confidence >= cfg.margin_threshold) return base;
  return lexical();
}

}  // namespace dsent
