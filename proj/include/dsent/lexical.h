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

#ifndef DSENT_LEXICAL_H_
#define DSENT_LEXICAL_H_

#include <span>
#include <string>

#include "dsent/lexicon.h"
#include "dsent/prediction.h"

namespace dsent {

struct LexicalRuleConfig {
  // Tokens inspected before (and optionally after) each sentiment word.
  size_t window = 3;
  size_t window_after = 0;
  double intensifier_factor = 3.0;
  double downtoner_divisor = 3.0;
  double negation_factor = -1.0;
  // Label assigned when the score is exactly 0.
  Polarity tie_label = Polarity::kPositive;
};

// Sum of adjusted word values. For each word with value v, the surrounding
// window decides the adjustment:
//   negation + intensifier, or negation + downtoner -> v / divisor
//   negation                                        -> v * negation_factor
//   intensifier                                     -> v * intensifier_factor
//   downtoner                                       -> v / divisor
// An intensifier and a downtoner without negation apply both.
double lexical_score(std::span<const std::string> words,
                     const SentimentLexicon& lex,
                     const LexicalRuleConfig& cfg = {});

// Sign of the score (ties go to cfg.tie_label); confidence = |score|.
Prediction lexical_classify(std::span<const std::string> words,
                            const SentimentLexicon& lex,
                            const LexicalRuleConfig& cfg = {});

}  // namespace dsent

#endif  // DSENT_LEXICAL_H_
