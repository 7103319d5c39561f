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

#ifndef DSENT_PIPELINE_H_
#define DSENT_PIPELINE_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dsent/corpus.h"
#include "dsent/eval.h"
#include "dsent/hybrid.h"
#include "dsent/lexical.h"
#include "dsent/logistic.h"
#include "dsent/model_io.h"

namespace dsent {

// Model and preprocessing disagree (e.g. a w2v model loaded with a different
// embedding table).
class RepresentationMismatch : public Error {
 public:
  using Error::Error;
};

// Feature terms of raw text: tokenize, then keep words and placeholders.
std::vector<std::string> text_terms(std::string_view text);

// text_terms over many texts, optionally split across `threads` workers.
std::vector<std::vector<std::string>> text_terms_batch(
    std::span<const std::string> texts, unsigned threads = 1);

struct TrainConfig {
  Representation representation = Representation::kTfIdf;
  uint64_t min_df = 2;
  TrainOptions sgd;
  unsigned threads = 1;
};

// Fits the tf-idf statistics and a logistic model on a labeled corpus.
// `embeddings` is required for the embedding-average representation.
ModelBundle train_model(std::span<const LabeledRecord> corpus,
                        const TrainConfig& config,
                        const EmbeddingTable* embeddings = nullptr,
                        const EpochCallback& on_epoch = {});

// A loaded model ready to classify raw text, optionally in hybrid mode.
class PolarityClassifier {
 public:
  // Throws RepresentationMismatch when the model needs embeddings and
  // `embeddings` is absent or has a different fingerprint.
  explicit PolarityClassifier(ModelBundle model,
                              std::optional<EmbeddingTable> embeddings = std::nullopt);

  void enable_hybrid(SentimentLexicon lexicon, HybridConfig hybrid = {},
                     LexicalRuleConfig rules = {});
  bool hybrid() const { return lexicon_.has_value(); }

  SparseVector featurize(std::span<const std::string> terms) const;
  Prediction classify_terms(std::span<const std::string> terms) const;
  Prediction classify(std::string_view text) const;

  // "LR + tfidf", "LR + w2v", or "Hybrid (LR + ...)".
  std::string method_name() const;
  const ModelBundle& model() const { return model_; }

 private:
  ModelBundle model_;
  std::optional<EmbeddingTable> embeddings_;
  std::optional<SentimentLexicon> lexicon_;
  HybridConfig hybrid_config_;
  LexicalRuleConfig rules_;
};

// Classifies every record and scores against its gold label.
// Throws InvalidArgument on an empty dataset.
EvalReport evaluate_dataset(const PolarityClassifier& classifier,
                            std::span<const LabeledRecord> dataset,
                            std::string dataset_name, std::string method_name,
                            unsigned threads = 1);

}  // namespace dsent

#endif  // DSENT_PIPELINE_H_
