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

#ifndef DSENT_TOKENIZER_H_
#define DSENT_TOKENIZER_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dsent {

enum class TokenKind { kWord, kEmoticon, kEmoji, kPlaceholder };

// Placeholder surfaces. They stay uppercase so they never collide with
// lowercased words.
inline constexpr std::string_view kUsernameTag = "USERNAME";
inline constexpr std::string_view kHashtagTag = "HASHTAG";
inline constexpr std::string_view kUrlTag = "URL";
inline constexpr std::string_view kNumberTag = "NUMBER";

struct Token {
  std::string surface;
  TokenKind kind = TokenKind::kWord;
  // For emoticons, the base inventory form with trailing repetitions
  // collapsed (":((" -> ":("). Equals `surface` for every other kind.
  std::string canonical;

  static Token word(std::string s);
  static Token placeholder(std::string_view tag);

  friend bool operator==(const Token&, const Token&) = default;
};

struct TokenizedDocument {
  std::string id;
  std::vector<Token> tokens;
};

// Character classes used by the normalizer. Exposed so tests can check the
// "no punctuation inside words" property against the same definition.
bool is_emoji(char32_t cp);
bool is_emoji_modifier(char32_t cp);
bool is_space(char32_t cp);
bool is_punctuation(char32_t cp);
bool is_word_char(char32_t cp);
char32_t to_lower(char32_t cp);

// Emoticons recognized by the default tokenizer: the marker emoticons plus
// common non-marker ones (";)", ":P", "<3", ...).
const std::vector<std::string>& default_emoticon_inventory();

// Tweet normalizer. Applies, in order: URL, username and hashtag
// replacement; emoticon protection (longest match, trailing repeats
// absorbed); emoji isolation; number replacement; punctuation removal;
// lowercasing and trimming of character runs longer than 3 inside words.
//
// Immutable after construction and safe to share across threads.
class Tokenizer {
 public:
  Tokenizer();
  // `extra_emoticons` extends the default inventory, e.g. with emoticons from
  // a custom marker lexicon.
  explicit Tokenizer(std::span<const std::string> extra_emoticons);

  std::vector<Token> tokenize(std::string_view raw) const;

  const std::vector<std::u32string>& emoticons() const { return emoticons_; }

 private:
  // Sorted by decreasing length so the first hit is the longest match.
  std::vector<std::u32string> emoticons_;
};

// Tokenizes with the default inventory.
std::vector<Token> tokenize(std::string_view raw);

// Surfaces joined with single spaces.
std::string detokenize(std::span<const Token> tokens);

}  // namespace dsent

#endif  // DSENT_TOKENIZER_H_
