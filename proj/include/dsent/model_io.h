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

#ifndef DSENT_MODEL_IO_H_
#define DSENT_MODEL_IO_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "dsent/errors.h"
#include "dsent/features.h"
#include "dsent/logistic.h"

namespace dsent {

inline constexpr uint32_t kModelFormatVersion = 1;
inline constexpr std::string_view kModelMagic = "DSENTMDL";

enum class Representation : uint8_t { kTfIdf = 1, kEmbeddingAverage = 2 };

std::string_view representation_name(Representation r);

// Everything needed to featurize and classify new text. Embedding tables are
// not embedded; the file keeps their fingerprint so a mismatched table is
// detected at load time.
struct ModelBundle {
  Representation representation = Representation::kTfIdf;
  TfIdfModel tfidf;
  uint64_t embedding_fingerprint = 0;
  uint64_t embedding_dimension = 0;
  LogisticModel classifier;
  // Free-form effective configuration of the run that produced the model.
  std::string provenance;
};

class ModelFormatError : public Error {
 public:
  enum class Kind { kBadMagic, kVersion, kChecksum, kCorrupt };
  ModelFormatError(Kind kind, const std::string& what)
      : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Layout: magic, u32 version, u64 payload size, payload, u64 FNV-1a
// checksum of the payload. All integers little-endian; doubles stored as
// their IEEE-754 bit patterns.
void save_model(const ModelBundle& model, std::ostream& out);
void save_model_file(const ModelBundle& model, const std::string& path);

ModelBundle load_model(std::istream& in);
ModelBundle load_model_file(const std::string& path);

}  // namespace dsent

#endif  // DSENT_MODEL_IO_H_
