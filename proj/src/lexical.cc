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

#include "dsent/lexical.h"

#include <algorithm>
#include <cmath>

namespace dsent {

double lexical_score(std::span<const std::string> words,
                     const SentimentLexicon& lex,
                     const LexicalRuleConfig& cfg) {
  double score = 0.0;
  for (size_t i = 0; i < words.size(); ++i) {
    const int value = lex.value(words[i]);
    if (value == 0) continue;

    bool negation = false;
    bool intensifier = false;
    bool downtoner = false;
    const size_t begin = i >= cfg.window ? i - cfg.window : 0;
    const size_t end = std::min(words.size(), i + 1 + cfg.window_after);
    for (size_t j = begin; j < end; ++j) {
      if (j == i) continue;
      negation |= lex.negations.count(words[j]) > 0;
      intensifier |= lex.intensifiers.count(words[j]) > 0;
      downtoner |= lex.downtoners.count(words[j]) > 0;
    }

    double v = value;
    if (negation && (intensifier || downtoner)) {
      v /= cfg.downtoner_divisor;
    } else if (negation) {
      v *= cfg.negation_factor;
    } else {
      if (intensifier) v *= cfg.intensifier_factor;
      if (downtoner) v /= cfg.downtoner_divisor;
    }
    score += v;
  }
  return score;
}

Prediction lexical_classify(std::span<const std::string> words,
                            const SentimentLexicon& lex,
                            const LexicalRuleConfig& cfg) {
  const double score = lexical_score(words, lex, cfg);
  Prediction p;
  if (score > 0) {
    p.label = Polarity::kPositive;
  } else if (score < 0) {
    p.label = Polarity::kNegative;
  } else {
    p.label = cfg.tie_label;
  }
  p.confidence = std::abs(score);
  return p;
}

}  // namespace dsent
