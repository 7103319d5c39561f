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

#include "dsent/pipeline.h"

#include <future>

#include "dsent/tokenizer.h"

namespace dsent {
namespace {

// Runs fn(i) for i in [0, n), split into contiguous chunks.
template <typename Fn>
void parallel_for(size_t n, unsigned threads, Fn fn) {
  if (threads <= 1 || n < 2 * static_cast<size_t>(threads)) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const size_t per = (n + threads - 1) / threads;
  std::vector<std::future<void>> jobs;
  for (size_t begin = 0; begin < n; begin += per) {
    const size_t end = std::min(n, begin + per);
    jobs.push_back(std::async(std::launch::async, [&fn, begin, end] {
      for (size_t i = begin; i < end; ++i) fn(i);
    }));
  }
  for (auto& j : jobs) j.get();
}

}  // namespace

std::vector<std::string> text_terms(std::string_view text) {
  return feature_terms(tokenize(text));
}

std::vector<std::vector<std::string>> text_terms_batch(
    std::span<const std::string> texts, unsigned threads) {
  std::vector<std::vector<std::string>> out(texts.size());
  parallel_for(texts.size(), threads,
               [&](size_t i) { out[i] = text_terms(texts[i]); });
  return out;
}

ModelBundle train_model(std::span<const LabeledRecord> corpus,
                        const TrainConfig& config,
                        const EmbeddingTable* embeddings,
                        const EpochCallback& on_epoch) {
  if (config.representation == Representation::kEmbeddingAverage && !embeddings) {
    throw InvalidArgument("embedding-average representation needs embeddings");
  }
  std::vector<std::string> texts;
  std::vector<Polarity> labels;
  texts.reserve(corpus.size());
  labels.reserve(corpus.size());
  for (const auto& r : corpus) {
    texts.push_back(r.text);
    labels.push_back(r.label);
  }
  const auto docs = text_terms_batch(texts, config.threads);

  ModelBundle bundle;
  bundle.representation = config.representation;
  bundle.tfidf = fit_tfidf(docs, config.min_df);

  std::vector<SparseVector> rows(docs.size());
  if (config.representation == Representation::kTfIdf) {
    parallel_for(docs.size(), config.threads, [&](size_t i) {
      rows[i] = transform_tfidf(bundle.tfidf, docs[i]);
    });
  } else {
    bundle.embedding_fingerprint = embeddings->fingerprint();
    bundle.embedding_dimension = embeddings->dimension();
    parallel_for(docs.size(), config.threads, [&](size_t i) {
      rows[i] = SparseVector::from_dense(
          embed_average(docs[i], *embeddings, bundle.tfidf));
    });
  }
  bundle.classifier = train_logistic(rows, labels, config.sgd, nullptr, on_epoch);
  return bundle;
}

PolarityClassifier::PolarityClassifier(ModelBundle model,
                                       std::optional<EmbeddingTable> embeddings)
    : model_(std::move(model)), embeddings_(std::move(embeddings)) {
  if (model_.representation != Representation::kEmbeddingAverage) return;
  if (!embeddings_) {
    throw RepresentationMismatch("model uses w2v features; embeddings required");
  }
  if (embeddings_->dimension() != model_.embedding_dimension ||
      embeddings_->fingerprint() != model_.embedding_fingerprint) {
    throw RepresentationMismatch(
        "embedding table fingerprint does not match the one the model was "
        "trained with");
  }
}

void PolarityClassifier::enable_hybrid(SentimentLexicon lexicon,
                                       HybridConfig hybrid,
                                       LexicalRuleConfig rules) {
  lexicon_ = std::move(lexicon);
  hybrid_config_ = hybrid;
  rules_ = rules;
}

SparseVector PolarityClassifier::featurize(std::span<const std::string> terms) const {
  if (model_.representation == Representation::kTfIdf) {
    return transform_tfidf(model_.tfidf, terms);
  }
  return SparseVector::from_dense(embed_average(terms, *embeddings_, model_.tfidf));
}

Prediction PolarityClassifier::classify_terms(std::span<const std::string> terms) const {
  const Prediction base = predict_logistic(model_.classifier, featurize(terms));
  if (!lexicon_) return base;
  return hybrid_classify(
      base, [&] { return lexical_classify(terms, *lexicon_, rules_); },
      hybrid_config_);
}

Prediction PolarityClassifier::classify(std::string_view text) const {
  return classify_terms(text_terms(text));
}

std::string PolarityClassifier::method_name() const {
  std::string base = "LR + ";
  base += representation_name(model_.representation);
  return lexicon_ ? "Hybrid (" + base + ")" : base;
}

EvalReport evaluate_dataset(const PolarityClassifier& classifier,
                            std::span<const LabeledRecord> dataset,
                            std::string dataset_name, std::string method_name,
                            unsigned threads) {
  if (dataset.empty()) throw InvalidArgument("evaluation dataset is empty");
  std::vector<Polarity> predicted(dataset.size());
  std::vector<Polarity> gold(dataset.size());
  parallel_for(dataset.size(), threads, [&](size_t i) {
    predicted[i] = classifier.classify(dataset[i].text).label;
    gold[i] = dataset[i].label;
  });
  return metrics(confusion(predicted, gold), std::move(dataset_name),
                 std::move(method_name));
}

}  // namespace dsent
