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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "dsent/errors.h"
#include "oracles.h"
#include "test_util.h"

namespace dsent {
namespace {

using Doc = std::vector<std::string>;

const std::vector<Doc> kTwoDocs = {{"a", "b"}, {"a", "c"}};

TEST(FitTfIdfTest, HandComputedIdf) {
  const auto model = fit_tfidf(kTwoDocs, 1);
  EXPECT_EQ(model.vocabulary.terms(), (Doc{"a", "b", "c"}));
  EXPECT_EQ(model.vocabulary.document_frequency(), (std::vector<uint64_t>{2, 1, 1}));
  EXPECT_EQ(model.vocabulary.num_documents(), 2u);
  EXPECT_DOUBLE_EQ(model.idf[0], 1.0);
  EXPECT_NEAR(model.idf[1], 1.405465, 1e-6);
  EXPECT_NEAR(model.idf[1], std::log(1.5) + 1.0, 1e-15);
  EXPECT_EQ(model.idf[1], model.idf[2]);
}

TEST(FitTfIdfTest, IdenticalDocumentsGiveUnitIdf) {
  for (size_t n : {1u, 2u, 7u, 50u}) {
    const std::vector<Doc> corpus(n, Doc{"x", "y", "y", "z"});
    const auto model = fit_tfidf(corpus, 1);
    for (double v : model.idf) EXPECT_EQ(v, 1.0);
  }
}

TEST(FitTfIdfTest, Errors) {
  EXPECT_THROW(fit_tfidf(kTwoDocs, 3), InvalidArgument);
  EXPECT_THROW(fit_tfidf({}, 1), InvalidArgument);
  EXPECT_THROW(fit_tfidf({{}, {}}, 1), InvalidArgument);
}

TEST(FitTfIdfTest, DefaultMinDfIsTwo) {
  const auto model = fit_tfidf(kTwoDocs);
  EXPECT_EQ(model.vocabulary.terms(), (Doc{"a"}));
}

TEST(TransformTfIdfTest, RepeatedTerm) {
  const auto model = fit_tfidf(kTwoDocs, 1);
  const Doc doc = {"a", "a", "b"};
  const auto v = transform_tfidf(model, doc);
  const double b = std::log(1.5) + 1.0;
  const double norm = std::sqrt(4.0 + b * b);
  ASSERT_EQ(v.indices, (std::vector<uint32_t>{0, 1}));
  EXPECT_NEAR(v.values[0], 2.0 / norm, 1e-15);
  EXPECT_NEAR(v.values[1], b / norm, 1e-15);
  EXPECT_NEAR(v.norm(), 1.0, 1e-12);
  EXPECT_EQ(v.dimension, 3u);
}

TEST(TransformTfIdfTest, OutOfVocabularyIsZero) {
  const auto model = fit_tfidf(kTwoDocs, 1);
  const Doc doc = {"zzz", "q"};
  const auto v = transform_tfidf(model, doc);
  EXPECT_EQ(v.nnz(), 0u);
  EXPECT_EQ(v.norm(), 0.0);
  EXPECT_EQ(transform_tfidf(model, Doc{}).nnz(), 0u);
}

Doc random_doc(std::mt19937_64& rng, size_t alphabet, size_t max_len) {
  Doc doc;
  const size_t len = testing::uniform(rng, max_len + 1);
  for (size_t i = 0; i < len; ++i) {
    doc.push_back("t" + std::to_string(testing::uniform(rng, alphabet)));
  }
  return doc;
}

TEST(TransformTfIdfProperty, NormIsZeroOrOne) {
  std::mt19937_64 rng(9);
  std::vector<Doc> corpus;
  for (int i = 0; i < 200; ++i) corpus.push_back(random_doc(rng, 60, 15));
  const auto model = fit_tfidf(corpus, 2);
  for (int i = 0; i < 2000; ++i) {
    const auto doc = random_doc(rng, 90, 15);
    const auto v = transform_tfidf(model, doc);
    const double n = v.norm();
    ASSERT_TRUE(n == 0.0 || std::abs(n - 1.0) < 1e-9) << n;
    for (size_t k = 0; k < v.nnz(); ++k) {
      ASSERT_NE(v.values[k], 0.0);
      ASSERT_LT(v.indices[k], v.dimension);
      if (k) ASSERT_LT(v.indices[k - 1], v.indices[k]);
    }
  }
}

TEST(TransformTfIdfProperty, MatchesDenseOracle) {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Doc> corpus;
    const size_t n = 1 + testing::uniform(rng, 20);
    for (size_t i = 0; i < n; ++i) corpus.push_back(random_doc(rng, 12, 10));
    corpus[0].push_back("t0");
    corpus.back().push_back("t0");
    const uint64_t min_df = n > 1 ? 1 + testing::uniform(rng, 2) : 1;
    const auto oracle = testing::brute_force_tfidf(corpus, min_df);
    const auto model = fit_tfidf(corpus, min_df);
    ASSERT_EQ(model.vocabulary.terms(), oracle.terms);
    for (size_t t = 0; t < oracle.idf.size(); ++t) {
      ASSERT_NEAR(model.idf[t], oracle.idf[t], 1e-9);
    }
    for (size_t d = 0; d < corpus.size(); ++d) {
      const auto dense = transform_tfidf(model, corpus[d]).to_dense();
      ASSERT_EQ(dense.size(), oracle.rows[d].size());
      for (size_t t = 0; t < dense.size(); ++t) {
        ASSERT_NEAR(dense[t], oracle.rows[d][t], 1e-9);
      }
    }
  }
}

TEST(VocabularyTest, Validation) {
  EXPECT_THROW(Vocabulary({"a", "a"}, {1, 1}, 2), InvalidArgument);
  EXPECT_THROW(Vocabulary({"a"}, {3}, 2), InvalidArgument);
  EXPECT_THROW(Vocabulary({"a"}, {0}, 2), InvalidArgument);
  EXPECT_THROW(Vocabulary({"a", "b"}, {1}, 2), InvalidArgument);
  const Vocabulary v({"a", "b"}, {1, 2}, 2);
  EXPECT_EQ(v.find("b"), 1u);
  EXPECT_EQ(v.find("c"), std::nullopt);
}

TEST(FeatureTermsTest, KeepsWordsAndPlaceholders) {
  const auto tokens = tokenize("oi @ana :) 😊 10h bom");
  EXPECT_EQ(feature_terms(tokens), (Doc{"oi", "USERNAME", "NUMBER", "bom"}));
}

TEST(SparseVectorTest, DenseRoundTrip) {
  const std::vector<double> dense = {0.0, 1.5, 0.0, -2.0};
  const auto v = SparseVector::from_dense(dense);
  EXPECT_EQ(v.indices, (std::vector<uint32_t>{1, 3}));
  EXPECT_EQ(v.to_dense(), dense);
  const std::vector<double> w = {1, 2, 3, 4};
  EXPECT_DOUBLE_EQ(v.dot(w), 3.0 - 8.0);
}

TEST(EmbeddingsTest, ParseSimpleFile) {
  const auto table = parse_embeddings("2 3\na 1 0 0\nb 0 1 0\n");
  EXPECT_EQ(table.size(), 2u);
  EXPECT_EQ(table.dimension(), 3u);
  ASSERT_NE(table.find("b"), nullptr);
  EXPECT_EQ(table.find("b")[1], 1.0);
  EXPECT_EQ(table.find("c"), nullptr);
}

TEST(EmbeddingsTest, DimensionMismatchNamesLine) {
  try {
    parse_embeddings("2 3\na 1 0 0\nb 0 1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(parse_embeddings(""), ParseError);
  EXPECT_THROW(parse_embeddings("1 2\na 1 x\n"), ParseError);
}

TEST(EmbeddingsTest, DuplicateKeepsLastWithWarning) {
  std::vector<std::string> warnings;
  const auto table = parse_embeddings("2 2\na 1 1\na 2 2\n", &warnings);
  EXPECT_EQ(table.size(), 1u);
  EXPECT_EQ(table.find("a")[0], 2.0);
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_NE(warnings[0].find("a"), std::string::npos);
}

TEST(EmbeddingsTest, LoadFromFile) {
  testing::TempDir dir;
  testing::write_file(dir.file("e.txt"), "1 2\nbom 0.5 -0.25\n");
  const auto table = load_embeddings(dir.file("e.txt"));
  EXPECT_EQ(table.find("bom")[1], -0.25);
  EXPECT_THROW(load_embeddings(dir.file("missing.txt")), IoError);
}

TEST(EmbedAverageTest, Examples) {
  const auto table = parse_embeddings("3 3\na 1 0 0\nb 0 1 0\nc 0 0 1\n");
  const auto model = fit_tfidf(kTwoDocs, 1);
  EXPECT_EQ(embed_average(Doc{"a"}, table, model), (std::vector<double>{1, 0, 0}));
  EXPECT_EQ(embed_average(Doc{"b", "c"}, table, model),
            (std::vector<double>{0, 0.5, 0.5}));
  const auto v = embed_average(Doc{"a", "a", "b"}, table, model);
  const double wb = std::log(1.5) + 1.0;
  EXPECT_NEAR(v[0], 2.0 / (2.0 + wb), 1e-15);
  EXPECT_NEAR(v[1], wb / (2.0 + wb), 1e-15);
  EXPECT_EQ(v[2], 0.0);
  EXPECT_EQ(embed_average(Doc{"zzz"}, table, model), (std::vector<double>{0, 0, 0}));
}

TEST(EmbedAverageProperty, ScalingIsLinear) {
  std::mt19937_64 rng(31);
  std::vector<Doc> corpus;
  for (int i = 0; i < 50; ++i) corpus.push_back(random_doc(rng, 30, 12));
  const auto model = fit_tfidf(corpus, 1);
  EmbeddingTable table(8);
  for (int t = 0; t < 30; ++t) {
    std::vector<double> vec(8);
    for (auto& x : vec) x = testing::uniform_real(rng, -1, 1);
    table.set("t" + std::to_string(t), vec);
  }
  for (double c : {2.0, -0.5, 0.125}) {
    EmbeddingTable scaled = table;
    scaled.scale(c);
    for (const auto& doc : corpus) {
      const auto base = embed_average(doc, table, model);
      const auto got = embed_average(doc, scaled, model);
      for (size_t k = 0; k < base.size(); ++k) {
        ASSERT_NEAR(got[k], c * base[k], 1e-12 * (1 + std::abs(base[k])));
      }
    }
  }
}

TEST(FingerprintTest, ChangesWithContent) {
  const auto a = fit_tfidf(kTwoDocs, 1);
  const auto b = fit_tfidf({{"a", "b"}, {"a", "d"}}, 1);
  EXPECT_EQ(a.fingerprint(), fit_tfidf(kTwoDocs, 1).fingerprint());
  EXPECT_NE(a.fingerprint(), b.fingerprint());
  EmbeddingTable t1(2), t2(2);
  t1.set("x", std::vector<double>{1, 2});
  t2.set("x", std::vector<double>{1, 3});
  EXPECT_NE(t1.fingerprint(), t2.fingerprint());
  EXPECT_FALSE(t2.set("y", std::vector<double>{0, 0}));
  EXPECT_TRUE(t2.set("y", std::vector<double>{1, 0}));
}

}  // namespace
}  // namespace dsent
