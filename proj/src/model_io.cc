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

#include "dsent/model_io.h"

#include <bit>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>

#include "dsent/fingerprint.h"

namespace dsent {
namespace {

using Kind = ModelFormatError::Kind;

class Writer {
 public:
  void u8(uint8_t v) { buf_.push_back(static_cast<char>(v)); }
  void u32(uint32_t v) {
    for (int i = 0; i < 4; ++i) u8(static_cast<uint8_t>(v >> (8 * i)));
  }
  void u64(uint64_t v) {
    for (int i = 0; i < 8; ++i) u8(static_cast<uint8_t>(v >> (8 * i)));
  }
  void f64(double v) { u64(std::bit_cast<uint64_t>(v)); }
  void str(std::string_view s) {
    u64(s.size());
    buf_.append(s);
  }
  const std::string& bytes() const { return buf_; }

 private:
  std::string buf_;
};

class Reader {
 public:
  explicit Reader(std::string_view buf) : buf_(buf) {}

  uint8_t u8() {
    need(1);
    return static_cast<uint8_t>(buf_[pos_++]);
  }
  uint32_t u32() {
    uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(u8()) << (8 * i);
    return v;
  }
  uint64_t u64() {
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(u8()) << (8 * i);
    return v;
  }
  double f64() { return std::bit_cast<double>(u64()); }
  std::string str() {
    const uint64_t n = u64();
    need(n);
    std::string s(buf_.substr(pos_, n));
    pos_ += n;
    return s;
  }
  // Guards element counts read from the file against the remaining bytes.
  uint64_t count(size_t min_element_bytes) {
    const uint64_t n = u64();
    if (min_element_bytes && n > remaining() / min_element_bytes) {
      throw ModelFormatError(Kind::kCorrupt, "model payload: implausible count");
    }
    return n;
  }
  size_t remaining() const { return buf_.size() - pos_; }

 private:
  void need(uint64_t n) const {
    if (n > remaining()) {
      throw ModelFormatError(Kind::kCorrupt, "model payload ends unexpectedly");
    }
  }

  std::string_view buf_;
  size_t pos_ = 0;
};

std::string encode_payload(const ModelBundle& m) {
  Writer w;
  w.u8(static_cast<uint8_t>(m.representation));
  const Vocabulary& vocab = m.tfidf.vocabulary;
  w.u64(m.tfidf.fingerprint());
  w.u64(vocab.num_documents());
  w.u64(vocab.size());
  for (size_t i = 0; i < vocab.size(); ++i) {
    w.str(vocab.terms()[i]);
    w.u64(vocab.document_frequency()[i]);
  }
  w.u64(m.embedding_fingerprint);
  w.u64(m.embedding_dimension);
  w.u64(m.classifier.weights.size());
  for (double x : m.classifier.weights) w.f64(x);
  w.f64(m.classifier.bias);
  const TrainOptions& meta = m.classifier.meta;
  w.u64(meta.seed);
  w.u32(meta.epochs);
  w.u32(meta.batch_size);
  w.f64(meta.learning_rate);
  w.f64(meta.l2_strength);
  w.str(m.provenance);
  return w.bytes();
}

ModelBundle decode_payload(std::string_view payload) {
  Reader r(payload);
  ModelBundle m;
  const uint8_t repr = r.u8();
  if (repr != static_cast<uint8_t>(Representation::kTfIdf) &&
      repr != static_cast<uint8_t>(Representation::kEmbeddingAverage)) {
    throw ModelFormatError(Kind::kCorrupt, "unknown representation tag " +
                                               std::to_string(repr));
  }
  m.representation = static_cast<Representation>(repr);
  const uint64_t vocab_fingerprint = r.u64();
  const uint64_t num_docs = r.u64();
  const uint64_t vocab_size = r.count(16);
  std::vector<std::string> terms;
  std::vector<uint64_t> df;
  terms.reserve(vocab_size);
  df.reserve(vocab_size);
  for (uint64_t i = 0; i < vocab_size; ++i) {
    terms.push_back(r.str());
    df.push_back(r.u64());
  }
  try {
    m.tfidf = make_tfidf_model(Vocabulary(std::move(terms), std::move(df), num_docs));
  } catch (const InvalidArgument& e) {
    throw ModelFormatError(Kind::kCorrupt, std::string("model vocabulary: ") + e.what());
  }
  if (m.tfidf.fingerprint() != vocab_fingerprint) {
    throw ModelFormatError(Kind::kCorrupt, "vocabulary fingerprint mismatch");
  }
  m.embedding_fingerprint = r.u64();
  m.embedding_dimension = r.u64();
  const uint64_t dim = r.count(8);
  m.classifier.weights.resize(dim);
  for (double& x : m.classifier.weights) x = r.f64();
  m.classifier.bias = r.f64();
  TrainOptions& meta = m.classifier.meta;
  meta.seed = r.u64();
  meta.epochs = r.u32();
  meta.batch_size = r.u32();
  meta.learning_rate = r.f64();
  meta.l2_strength = r.f64();
  m.provenance = r.str();
  if (r.remaining() != 0) {
    throw ModelFormatError(Kind::kCorrupt, "trailing bytes in model payload");
  }
  const uint64_t expected_dim = m.representation == Representation::kTfIdf
                                    ? m.tfidf.dimension()
                                    : m.embedding_dimension;
  if (dim != expected_dim) {
    throw ModelFormatError(Kind::kCorrupt,
                           "weight dimension does not match representation");
  }
  return m;
}

uint64_t read_le(const std::string& bytes, size_t offset, int width) {
  uint64_t v = 0;
  for (int i = 0; i < width; ++i) {
    v |= static_cast<uint64_t>(static_cast<uint8_t>(bytes[offset + i])) << (8 * i);
  }
  return v;
}

}  // namespace

std::string_view representation_name(Representation r) {
  return r == Representation::kTfIdf ? "tfidf" : "w2v";
}

void save_model(const ModelBundle& model, std::ostream& out) {
  const std::string payload = encode_payload(model);
  Fnv1a checksum;
  checksum.update(payload);
  Writer header;
  header.u32(kModelFormatVersion);
  header.u64(payload.size());
  Writer trailer;
  trailer.u64(checksum.digest());
  out.write(kModelMagic.data(), kModelMagic.size());
  out << header.bytes() << payload << trailer.bytes();
  if (!out) throw IoError("write error while saving model");
}

void save_model_file(const ModelBundle& model, const std::string& path) {
  const std::string tmp = path + ".partial";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path + " for writing");
    save_model(model, out);
    out.close();
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw IoError("write error on " + path);
    }
  }
  std::filesystem::rename(tmp, path);
}

ModelBundle load_model(std::istream& in) {
  const std::string bytes((std::istreambuf_iterator<char>(in)),
                          std::istreambuf_iterator<char>());
  const size_t magic_len = kModelMagic.size();
  if (bytes.size() < magic_len ||
      std::string_view(bytes).substr(0, magic_len) != kModelMagic) {
    if (bytes.size() < magic_len && kModelMagic.starts_with(bytes) && !bytes.empty()) {
      throw ModelFormatError(Kind::kChecksum, "model file truncated");
    }
    throw ModelFormatError(Kind::kBadMagic, "not a model file (bad magic)");
  }
  if (bytes.size() < magic_len + 4) {
    throw ModelFormatError(Kind::kChecksum, "model file truncated");
  }
  const uint32_t version = static_cast<uint32_t>(read_le(bytes, magic_len, 4));
  if (version != kModelFormatVersion) {
    throw ModelFormatError(
        Kind::kVersion, "model format version " + std::to_string(version) +
                            " is not supported by this build (reads version " +
                            std::to_string(kModelFormatVersion) + ")");
  }
  const size_t header_len = magic_len + 4 + 8;
  if (bytes.size() < header_len) {
    throw ModelFormatError(Kind::kChecksum, "model file truncated");
  }
  const uint64_t payload_len = read_le(bytes, magic_len + 4, 8);
  if (bytes.size() - header_len < 8 || payload_len > bytes.size() - header_len - 8) {
    throw ModelFormatError(Kind::kChecksum,
                           "checksum failure: model file truncated");
  }
  const std::string_view payload =
      std::string_view(bytes).substr(header_len, payload_len);
  const uint64_t stored = read_le(bytes, header_len + payload_len, 8);
  Fnv1a checksum;
  checksum.update(payload);
  if (checksum.digest() != stored) {
    throw ModelFormatError(Kind::kChecksum, "checksum failure: model payload corrupted");
  }
  if (bytes.size() != header_len + payload_len + 8) {
    throw ModelFormatError(Kind::kCorrupt, "trailing bytes after model checksum");
  }
  return decode_payload(payload);
}

ModelBundle load_model_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open model " + path);
  return load_model(in);
}

}  // namespace dsent
