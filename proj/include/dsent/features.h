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

#ifndef DSENT_FEATURES_H_
#define DSENT_FEATURES_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "dsent/tokenizer.h"

namespace dsent {

// Terms used as features: Word and Placeholder surfaces. Emoticons and
// emojis never reach the models.
std::vector<std::string> feature_terms(std::span<const Token> tokens);

// Sparse vector with strictly increasing indices and no stored zeros.
struct SparseVector {
  size_t dimension = 0;
  std::vector<uint32_t> indices;
  std::vector<double> values;

  size_t nnz() const { return indices.size(); }
  double norm() const;
  double dot(std::span<const double> dense) const;
  std::vector<double> to_dense() const;
  // Drops zeros from a dense vector.
  static SparseVector from_dense(std::span<const double> dense);
};

// Term -> dense index, with document frequencies. Terms are indexed in
// lexicographic byte order.
class Vocabulary {
 public:
  Vocabulary() = default;
  // Throws InvalidArgument if terms are not unique, df is out of range, or
  // sizes disagree.
  Vocabulary(std::vector<std::string> terms, std::vector<uint64_t> df,
             uint64_t num_documents);

  size_t size() const { return terms_.size(); }
  uint64_t num_documents() const { return num_documents_; }
  const std::vector<std::string>& terms() const { return terms_; }
  const std::vector<uint64_t>& document_frequency() const { return df_; }
  std::optional<uint32_t> find(const std::string& term) const;

 private:
  std::vector<std::string> terms_;
  std::vector<uint64_t> df_;
  uint64_t num_documents_ = 0;
  std::unordered_map<std::string, uint32_t> index_;
};

// idf(t) = ln((1 + N) / (1 + df(t))) + 1
double smoothed_idf(uint64_t num_documents, uint64_t df);

struct TfIdfModel {
  Vocabulary vocabulary;
  std::vector<double> idf;

  size_t dimension() const { return vocabulary.size(); }
  uint64_t fingerprint() const;
};

// Rebuilds a model from stored vocabulary statistics.
TfIdfModel make_tfidf_model(Vocabulary vocabulary);

// Keeps terms with df >= min_df. Throws InvalidArgument on an empty corpus
// or when the filter leaves no terms.
TfIdfModel fit_tfidf(const std::vector<std::vector<std::string>>& corpus,
                     uint64_t min_df = 2);

// count(t) * idf(t), L2-normalized. Out-of-vocabulary terms are ignored; a
// document with no known terms maps to the zero vector.
SparseVector transform_tfidf(const TfIdfModel& model,
                             std::span<const std::string> doc);

// Pretrained word vectors, all of the same dimension.
class EmbeddingTable {
 public:
  EmbeddingTable() = default;
  explicit EmbeddingTable(size_t dimension) : dimension_(dimension) {}

  size_t dimension() const { return dimension_; }
  size_t size() const { return words_.size(); }
  // Replaces an existing entry. Returns false if the word was new.
  bool set(const std::string& word, std::span<const double> vec);
  // nullptr when absent; otherwise `dimension()` values.
  const double* find(const std::string& word) const;
  uint64_t fingerprint() const;
  // Multiplies every vector by `factor`.
  void scale(double factor);

 private:
  size_t dimension_ = 0;
  std::vector<std::string> words_;
  std::vector<double> data_;
  std::unordered_map<std::string, size_t> index_;
};

// Text format: header `V D`, then V lines `word v1 ... vD`. Duplicate words
// keep the last occurrence and add a warning. Throws ParseError naming the
// line on dimension mismatches and on empty input.
EmbeddingTable load_embeddings(const std::string& path,
                               std::vector<std::string>* warnings = nullptr);
EmbeddingTable parse_embeddings(const std::string& text,
                                std::vector<std::string>* warnings = nullptr,
                                const std::string& source = "<string>");

// sum_t w(t) v(t) / sum_t w(t) over terms present in both the table and the
// vocabulary, w(t) = count(t) * idf(t). Zero vector when no term qualifies.
std::vector<double> embed_average(std::span<const std::string> doc,
                                  const EmbeddingTable& table,
                                  const TfIdfModel& model);

}  // namespace dsent

#endif  // DSENT_FEATURES_H_
