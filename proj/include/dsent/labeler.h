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

#ifndef DSENT_LABELER_H_
#define DSENT_LABELER_H_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dsent/lexicon.h"
#include "dsent/polarity.h"
#include "dsent/tokenizer.h"

namespace dsent {

// Minimum number of tokens a document must keep after marker removal.
inline constexpr size_t kMinDocumentTokens = 4;

enum class DiscardReason { kMixed, kNoMarker, kTooShort };
inline constexpr size_t kNumDiscardReasons = 3;

std::string_view discard_reason_name(DiscardReason r);

// A distant-supervision training document: markers removed, >= 4 tokens.
struct LabeledDocument {
  std::string id;
  std::vector<Token> tokens;
  Polarity polarity = Polarity::kPositive;
};

using LabelOutcome = std::variant<LabeledDocument, DiscardReason>;

// Positive if only positive markers occur, negative if only negative ones.
// Mixed and marker-free documents are discarded, as are documents left with
// fewer than kMinDocumentTokens tokens once markers are stripped.
LabelOutcome label_document(const TokenizedDocument& doc,
                            const MarkerLexicon& lex);

struct CorpusStats {
  uint64_t kept_positive = 0;
  uint64_t kept_negative = 0;
  std::array<uint64_t, kNumDiscardReasons> discarded{};
  uint64_t total_seen = 0;
  // Lines skipped before labeling; not part of total_seen.
  uint64_t malformed = 0;
  uint64_t duplicates = 0;

  uint64_t discarded_for(DiscardReason r) const {
    return discarded[static_cast<size_t>(r)];
  }
  uint64_t discarded_total() const;
  // kept_positive + kept_negative + sum(discarded) == total_seen
  bool conserved() const;

  friend bool operator==(const CorpusStats&, const CorpusStats&) = default;
};

struct BuildOptions {
  // Drop exact repeats of a message text before labeling.
  bool dedup = false;
  // Worker threads for tokenize+label; output order always equals input order.
  unsigned threads = 1;
  size_t batch_size = 4096;
};

// A raw input message.
struct RawMessage {
  std::string id;
  std::string text;
};

// Parses one input line. `json` selects the {"id":..., "text":...} record
// format; otherwise the whole line is the message. Returns nullopt for
// malformed lines (bad UTF-8, bad JSON, missing text).
std::optional<RawMessage> parse_raw_line(std::string_view line, bool json,
                                         uint64_t line_number);

// Labeled corpus line: `pos<TAB>text` / `neg<TAB>text`.
std::string format_corpus_line(const LabeledDocument& doc);

// Streams `in` line by line into `out`. The record format is detected from
// the first byte (`{` selects JSON records).
CorpusStats build_corpus(std::istream& in, std::ostream& out,
                         const MarkerLexicon& lex,
                         const BuildOptions& options = {});

// File variant. Writes through a temporary file that is renamed on success
// and removed on failure, so `output_path` never holds a partial corpus.
CorpusStats build_corpus_file(const std::string& input_path,
                              const std::string& output_path,
                              const MarkerLexicon& lex,
                              const BuildOptions& options = {});

}  // namespace dsent

#endif  // DSENT_LABELER_H_
