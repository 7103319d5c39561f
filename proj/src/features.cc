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

#include "dsent/features.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_set>

#include "dsent/errors.h"
#include "dsent/fingerprint.h"

namespace dsent {
namespace {

// (vocabulary index, count) pairs for in-vocabulary terms, sorted by index.
std::vector<std::pair<uint32_t, uint64_t>> count_terms(
    const Vocabulary& vocab, std::span<const std::string> doc) {
  std::map<uint32_t, uint64_t> counts;
  for (const auto& term : doc) {
    if (const auto idx = vocab.find(term)) ++counts[*idx];
  }
  return {counts.begin(), counts.end()};
}

std::vector<std::string> split_spaces(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream in(line);
  std::string field;
  while (in >> field) fields.push_back(field);
  return fields;
}

bool parse_double(const std::string& s, double* out) {
  const char* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, *out);
  return ec == std::errc() && ptr == end && std::isfinite(*out);
}

}  // namespace

std::vector<std::string> feature_terms(std::span<const Token> tokens) {
  std::vector<std::string> terms;
  terms.reserve(tokens.size());
  for (const Token& t : tokens) {
    if (t.kind == TokenKind::kWord || t.kind == TokenKind::kPlaceholder) {
      terms.push_back(t.surface);
    }
  }
  return terms;
}

double SparseVector::norm() const {
  double sum = 0.0;
  for (double v : values) sum += v * v;
  return std::sqrt(sum);
}

double SparseVector::dot(std::span<const double> dense) const {
  double sum = 0.0;
  for (size_t k = 0; k < indices.size(); ++k) {
    sum += values[k] * dense[indices[k]];
  }
  return sum;
}

std::vector<double> SparseVector::to_dense() const {
  std::vector<double> out(dimension, 0.0);
  for (size_t k = 0; k < indices.size(); ++k) out[indices[k]] = values[k];
  return out;
}

SparseVector SparseVector::from_dense(std::span<const double> dense) {
  SparseVector v;
  v.dimension = dense.size();
  for (size_t i = 0; i < dense.size(); ++i) {
    if (dense[i] != 0.0) {
      v.indices.push_back(static_cast<uint32_t>(i));
      v.values.push_back(dense[i]);
    }
  }
  return v;
}

Vocabulary::Vocabulary(std::vector<std::string> terms, std::vector<uint64_t> df,
                       uint64_t num_documents)
    : terms_(std::move(terms)), df_(std::move(df)), num_documents_(num_documents) {
  if (terms_.size() != df_.size()) {
    throw InvalidArgument("vocabulary: term and df counts differ");
  }
  index_.reserve(terms_.size());
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (df_[i] < 1 || df_[i] > num_documents_) {
      throw InvalidArgument("vocabulary: document frequency out of range for '" +
                            terms_[i] + "'");
    }
    if (!index_.emplace(terms_[i], static_cast<uint32_t>(i)).second) {
      throw InvalidArgument("vocabulary: duplicate term '" + terms_[i] + "'");
    }
  }
}

std::optional<uint32_t> Vocabulary::find(const std::string& term) const {
  const auto it = index_.find(term);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

double smoothed_idf(uint64_t num_documents, uint64_t df) {
  return std::log((1.0 + static_cast<double>(num_documents)) /
                  (1.0 + static_cast<double>(df))) +
         1.0;
}

uint64_t TfIdfModel::fingerprint() const {
  Fnv1a h;
  h.update_u64(vocabulary.num_documents());
  h.update_u64(vocabulary.size());
  for (size_t i = 0; i < vocabulary.size(); ++i) {
    h.update_string(vocabulary.terms()[i]);
    h.update_u64(vocabulary.document_frequency()[i]);
  }
  return h.digest();
}

TfIdfModel make_tfidf_model(Vocabulary vocabulary) {
  TfIdfModel model;
  model.idf.reserve(vocabulary.size());
  for (uint64_t df : vocabulary.document_frequency()) {
    model.idf.push_back(smoothed_idf(vocabulary.num_documents(), df));
  }
  model.vocabulary = std::move(vocabulary);
  return model;
}

TfIdfModel fit_tfidf(const std::vector<std::vector<std::string>>& corpus,
                     uint64_t min_df) {
  if (corpus.empty()) throw InvalidArgument("fit_tfidf: empty corpus");
  std::unordered_map<std::string, uint64_t> df;
  for (const auto& doc : corpus) {
    std::unordered_set<std::string_view> unique(doc.begin(), doc.end());
    for (std::string_view term : unique) ++df[std::string(term)];
  }
  std::vector<std::string> terms;
  for (const auto& [term, count] : df) {
    if (count >= min_df) terms.push_back(term);
  }
  if (terms.empty()) {
    throw InvalidArgument("fit_tfidf: no term reaches min_df=" +
                          std::to_string(min_df));
  }
  std::sort(terms.begin(), terms.end());
  std::vector<uint64_t> counts;
  counts.reserve(terms.size());
  for (const auto& t : terms) counts.push_back(df[t]);
  return make_tfidf_model(
      Vocabulary(std::move(terms), std::move(counts), corpus.size()));
}

SparseVector transform_tfidf(const TfIdfModel& model,
                             std::span<const std::string> doc) {
  SparseVector v;
  v.dimension = model.dimension();
  for (const auto& [idx, count] : count_terms(model.vocabulary, doc)) {
    v.indices.push_back(idx);
    v.values.push_back(static_cast<double>(count) * model.idf[idx]);
  }
  const double n = v.norm();
  if (n > 0.0) {
    for (double& x : v.values) x /= n;
  }
  return v;
}

bool EmbeddingTable::set(const std::string& word, std::span<const double> vec) {
  if (vec.size() != dimension_) {
    throw InvalidArgument("embedding dimension mismatch for '" + word + "'");
  }
  const auto it = index_.find(word);
  if (it != index_.end()) {
    std::copy(vec.begin(), vec.end(), data_.begin() + it->second * dimension_);
    return true;
  }
  index_.emplace(word, words_.size());
  words_.push_back(word);
  data_.insert(data_.end(), vec.begin(), vec.end());
  return false;
}

const double* EmbeddingTable::find(const std::string& word) const {
  const auto it = index_.find(word);
  if (it == index_.end()) return nullptr;
  return data_.data() + it->second * dimension_;
}

uint64_t EmbeddingTable::fingerprint() const {
  Fnv1a h;
  h.update_u64(dimension_);
  h.update_u64(words_.size());
  for (size_t i = 0; i < words_.size(); ++i) {
    h.update_string(words_[i]);
    for (size_t k = 0; k < dimension_; ++k) {
      h.update_double(data_[i * dimension_ + k]);
    }
  }
  return h.digest();
}

void EmbeddingTable::scale(double factor) {
  for (double& x : data_) x *= factor;
}

EmbeddingTable parse_embeddings(const std::string& text,
                                std::vector<std::string>* warnings,
                                const std::string& source) {
  std::istringstream in(text);
  std::string line;
  size_t lineno = 0;
  size_t declared = 0;
  size_t dim = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto header = split_spaces(line);
    if (header.empty()) continue;
    if (header.size() != 2) {
      throw ParseError(source, lineno, "expected header 'V D'");
    }
    try {
      declared = std::stoull(header[0]);
      dim = std::stoull(header[1]);
    } catch (const std::exception&) {
      throw ParseError(source, lineno, "expected header 'V D'");
    }
    if (dim == 0) throw ParseError(source, lineno, "dimension must be >= 1");
    break;
  }
  if (dim == 0) throw ParseError(source, 0, "empty embedding file");

  EmbeddingTable table(dim);
  std::vector<double> vec(dim);
  size_t rows = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto fields = split_spaces(line);
    if (fields.empty()) continue;
    if (fields.size() != dim + 1) {
      throw ParseError(source, lineno,
                       "expected " + std::to_string(dim) + " values, found " +
                           std::to_string(fields.size() - 1));
    }
    for (size_t k = 0; k < dim; ++k) {
      if (!parse_double(fields[k + 1], &vec[k])) {
        throw ParseError(source, lineno, "bad number '" + fields[k + 1] + "'");
      }
    }
    ++rows;
    if (table.set(fields[0], vec) && warnings) {
      warnings->push_back(source + ":" + std::to_string(lineno) +
                          ": duplicate word '" + fields[0] +
                          "', keeping last occurrence");
    }
  }
  if (rows == 0) throw ParseError(source, 0, "no embedding vectors");
  if (rows != declared && warnings) {
    warnings->push_back(source + ": header declares " + std::to_string(declared) +
                        " vectors, found " + std::to_string(rows));
  }
  return table;
}

EmbeddingTable load_embeddings(const std::string& path,
                               std::vector<std::string>* warnings) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open embeddings " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_embeddings(ss.str(), warnings, path);
}

std::vector<double> embed_average(std::span<const std::string> doc,
                                  const EmbeddingTable& table,
                                  const TfIdfModel& model) {
  const size_t dim = table.dimension();
  std::vector<double> sum(dim, 0.0);
  double weight_sum = 0.0;
  for (const auto& [idx, count] : count_terms(model.vocabulary, doc)) {
    const double* vec = table.find(model.vocabulary.terms()[idx]);
    if (!vec) continue;
    const double w = static_cast<double>(count) * model.idf[idx];
    for (size_t k = 0; k < dim; ++k) sum[k] += w * vec[k];
    weight_sum += w;
  }
  if (weight_sum == 0.0) return std::vector<double>(dim, 0.0);
  for (double& x : sum) x /= weight_sum;
  return sum;
}

}  // namespace dsent
