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

#ifndef DSENT_LEXICON_H_
#define DSENT_LEXICON_H_

#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "dsent/polarity.h"
#include "dsent/tokenizer.h"

namespace dsent {

// Emoticon and emoji sets that drive distant-supervision labeling.
// Positive and negative sets are disjoint; construction through make() or
// the loaders enforces it.
class MarkerLexicon {
 public:
  // Throws InvalidArgument when a marker appears on both sides.
  static MarkerLexicon make(std::set<std::string> positive_emoticons,
                            std::set<std::string> negative_emoticons,
                            std::set<char32_t> positive_emojis,
                            std::set<char32_t> negative_emojis);

  const std::set<std::string>& positive_emoticons() const { return pos_emoticons_; }
  const std::set<std::string>& negative_emoticons() const { return neg_emoticons_; }
  const std::set<char32_t>& positive_emojis() const { return pos_emojis_; }
  const std::set<char32_t>& negative_emojis() const { return neg_emojis_; }

  // All emoticons on either side, for extending a tokenizer inventory.
  std::vector<std::string> all_emoticons() const;

  friend bool operator==(const MarkerLexicon&, const MarkerLexicon&) = default;

 private:
  std::set<std::string> pos_emoticons_;
  std::set<std::string> neg_emoticons_;
  std::set<char32_t> pos_emojis_;
  std::set<char32_t> neg_emojis_;
};

// The built-in lexicon: 4 positive / 2 negative emoticons and 7 positive /
// 12 negative emojis.
const MarkerLexicon& default_marker_lexicon();

// Marker polarity of a single token, or nullopt for non-markers. Emoticons
// are looked up by canonical form, emojis by code point.
std::optional<Polarity> classify_marker(const Token& token,
                                        const MarkerLexicon& lex);

// Marker lexicon file: `pos<TAB>marker` or `neg<TAB>marker` per line, where
// marker is an emoticon, a literal emoji, or `U+XXXX`. `#` starts a comment.
MarkerLexicon load_marker_lexicon(const std::string& path);

// Word-level lexicon for the rule-based classifier. A word belongs to at most
// one of the four collections.
struct SentimentLexicon {
  std::unordered_map<std::string, int> word_values;  // +1 or -1
  std::unordered_set<std::string> intensifiers;
  std::unordered_set<std::string> downtoners;
  std::unordered_set<std::string> negations;

  // 0 when the word carries no polarity value.
  int value(const std::string& word) const;
  bool contains(const std::string& word) const;
};

// Small built-in Portuguese demonstration lexicon.
const SentimentLexicon& default_sentiment_lexicon();

// `word<TAB>tag` per line with tag in {+1, -1, INT, DOWN, NEG}. Words are
// stored lowercased. Throws ParseError with the line number on malformed
// lines and on words listed twice.
SentimentLexicon load_sentiment_lexicon(const std::string& path);
SentimentLexicon parse_sentiment_lexicon(const std::string& text,
                                         const std::string& source = "<string>");

}  // namespace dsent

#endif  // DSENT_LEXICON_H_
