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

#include "dsent/tokenizer.h"

#include <algorithm>
#include <array>
#include <set>

#include "dsent/utf8.h"

namespace dsent {
namespace {

constexpr size_t kMaxUsernameChars = 15;
constexpr size_t kMaxRepeat = 3;

constexpr std::array<std::string_view, 4> kPlaceholders = {
    kUsernameTag, kHashtagTag, kUrlTag, kNumberTag};

bool in_range(char32_t cp, char32_t lo, char32_t hi) {
  return cp >= lo && cp <= hi;
}

bool is_ascii_digit(char32_t cp) { return cp >= U'0' && cp <= U'9'; }

char32_t ascii_lower(char32_t cp) {
  return (cp >= U'A' && cp <= U'Z') ? cp + 32 : cp;
}

using Span = std::u32string_view;

bool starts_with_ci(Span text, std::u32string_view prefix) {
  if (text.size() < prefix.size()) return false;
  for (size_t i = 0; i < prefix.size(); ++i) {
    if (ascii_lower(text[i]) != prefix[i]) return false;
  }
  return true;
}

bool is_url_start(Span rest) {
  return starts_with_ci(rest, U"http://") ||
         starts_with_ci(rest, U"https://") || starts_with_ci(rest, U"www.");
}

// Digits with optional separators: 12/05/2017, 10:30, 3,50, 8h30, 8h, 50%.
// Returns the number of code points consumed, 0 if no number starts here.
size_t match_number(Span rest) {
  size_t k = 0;
  if (rest.size() >= 3 && rest[0] == U'R' && rest[1] == U'$' &&
      is_ascii_digit(rest[2])) {
    k = 2;
  } else if (rest.size() >= 2 &&
             (rest[0] == U'$' || rest[0] == U'€' ||
              rest[0] == U'£') &&
             is_ascii_digit(rest[1])) {
    k = 1;
  }
  if (k >= rest.size() || !is_ascii_digit(rest[k])) return 0;

  // Digit-initial words such as "4ever" stay words; only pure digit runs and
  // hour forms ("8h", "8h30") start a number.
  size_t a = k;
  while (a < rest.size() && is_word_char(rest[a])) ++a;
  {
    size_t d = k;
    while (d < a && is_ascii_digit(rest[d])) ++d;
    if (d < a) {
      if (rest[d] != U'h' && rest[d] != U'H') return 0;
      ++d;
      while (d < a && is_ascii_digit(rest[d])) ++d;
      if (d < a) return 0;
    }
  }

  size_t m = k;
  while (m < rest.size() && is_ascii_digit(rest[m])) ++m;
  while (m < rest.size()) {
    const char32_t c = rest[m];
    const bool sep = c == U'.' || c == U',' || c == U':' || c == U'/' ||
                     c == U'-' || c == U'h' || c == U'H';
    if (sep && m + 1 < rest.size() && is_ascii_digit(rest[m + 1])) {
      m += 2;
      while (m < rest.size() && is_ascii_digit(rest[m])) ++m;
      continue;
    }
    const bool suffix = c == U'h' || c == U'H' || c == U'%' || c == U'$';
    if (suffix && (m + 1 >= rest.size() || !is_word_char(rest[m + 1]))) {
      ++m;
    }
    break;
  }
  return m;
}

std::string normalize_word(Span run) {
  std::string out;
  char32_t prev = 0;
  size_t repeat = 0;
  for (char32_t cp : run) {
    const char32_t lower = to_lower(cp);
    repeat = (lower == prev) ? repeat + 1 : 1;
    prev = lower;
    if (repeat <= kMaxRepeat) append_utf8(lower, &out);
  }
  return out;
}

}  // namespace

Token Token::word(std::string s) {
  Token t;
  t.canonical = s;
  t.surface = std::move(s);
  t.kind = TokenKind::kWord;
  return t;
}

Token Token::placeholder(std::string_view tag) {
  Token t;
  t.surface = std::string(tag);
  t.canonical = t.surface;
  t.kind = TokenKind::kPlaceholder;
  return t;
}

bool is_emoji_modifier(char32_t cp) {
  return cp == 0xFE0E || cp == 0xFE0F || in_range(cp, 0x1F3FB, 0x1F3FF);
}

bool is_emoji(char32_t cp) {
  if (is_emoji_modifier(cp)) return false;
  return in_range(cp, 0x1F300, 0x1F5FF) ||  // misc symbols and pictographs
         in_range(cp, 0x1F600, 0x1F64F) ||  // emoticons
         in_range(cp, 0x1F680, 0x1F6FF) ||  // transport and map
         in_range(cp, 0x1F900, 0x1F9FF) ||  // supplemental symbols
         in_range(cp, 0x2600, 0x27BF);      // misc symbols, dingbats
}

bool is_space(char32_t cp) {
  return in_range(cp, 0x09, 0x0D) || cp == 0x20 || cp == 0x85 ||
         cp == 0xA0 || cp == 0x1680 || in_range(cp, 0x2000, 0x200A) ||
         cp == 0x2028 || cp == 0x2029 || cp == 0x202F || cp == 0x205F ||
         cp == 0x3000;
}

bool is_punctuation(char32_t cp) {
  if (is_space(cp) || is_emoji(cp) || is_emoji_modifier(cp)) return false;
  if (cp < 0x80) {
    if (cp == U'_') return false;
    return cp < 0x20 || in_range(cp, 0x21, 0x2F) || in_range(cp, 0x3A, 0x40) ||
           in_range(cp, 0x5B, 0x60) || in_range(cp, 0x7B, 0x7F);
  }
  if (in_range(cp, 0x80, 0xBF)) {
    // ª µ º and the superscript digits are kept as word characters.
    return !(cp == 0xAA || cp == 0xB5 || cp == 0xBA || cp == 0xB2 ||
             cp == 0xB3 || cp == 0xB9);
  }
  return cp == 0xD7 || cp == 0xF7 ||
         in_range(cp, 0x2000, 0x206F) ||  // general punctuation
         in_range(cp, 0x20A0, 0x20FF) ||  // currency, combining for symbols
         in_range(cp, 0x2100, 0x25FF) ||  // letterlike .. geometric shapes
         in_range(cp, 0x27C0, 0x2BFF) ||  // math, arrows, misc symbols
         in_range(cp, 0x2E00, 0x2E7F) || in_range(cp, 0x3000, 0x303F) ||
         in_range(cp, 0xFE10, 0xFE1F) || in_range(cp, 0xFE30, 0xFE6F) ||
         in_range(cp, 0xFF01, 0xFF0F) || in_range(cp, 0xFF1A, 0xFF20) ||
         in_range(cp, 0xFF3B, 0xFF3E) || cp == 0xFF40 ||
         in_range(cp, 0xFF5B, 0xFF65) || in_range(cp, 0xFFF0, 0xFFFF) ||
         in_range(cp, 0x1F000, 0x1FAFF) ||  // non-emoji pictographs, flags
         in_range(cp, 0xE0000, 0xE007F);
}

bool is_word_char(char32_t cp) {
  return !is_space(cp) && !is_punctuation(cp) && !is_emoji(cp) &&
         !is_emoji_modifier(cp);
}

char32_t to_lower(char32_t cp) {
  if (cp < 0x80) return ascii_lower(cp);
  if (in_range(cp, 0xC0, 0xDE) && cp != 0xD7) return cp + 0x20;
  if (in_range(cp, 0x100, 0x137) || in_range(cp, 0x14A, 0x177)) {
    return cp | 1;
  }
  if (in_range(cp, 0x139, 0x148) || in_range(cp, 0x179, 0x17E)) {
    return (cp & 1) ? cp + 1 : cp;
  }
  if (cp == 0x178) return 0xFF;
  if (in_range(cp, 0x391, 0x3AB) && cp != 0x3A2) return cp + 0x20;
  if (in_range(cp, 0x410, 0x42F)) return cp + 0x20;
  if (in_range(cp, 0x400, 0x40F)) return cp + 0x50;
  return cp;
}

const std::vector<std::string>& default_emoticon_inventory() {
  static const std::vector<std::string> kInventory = {
      // Marker emoticons.
      ":)", ":-)", ":D", "=)", ":(", ":-(",
      // Recognized but carrying no label.
      ";)", ";-)", ";D", ";-D", ":-D", "=D", "=(", ":P", ":-P", ":p", ":-p",
      ";P", ";p", "=P", "=p", ":'(", ":'-(", ":/", ":-/", "=/", ":\\", ":|",
      ":-|", ":O", ":-O", ":o", ":-o", "<3", ":*", ":-*", ":]", ":[", "=]",
      "=["};
  return kInventory;
}

Tokenizer::Tokenizer() : Tokenizer(std::span<const std::string>{}) {}

Tokenizer::Tokenizer(std::span<const std::string> extra_emoticons) {
  std::set<std::u32string> unique;
  for (const auto& e : default_emoticon_inventory()) {
    auto cps = decode_utf8(e);
    unique.emplace(cps.begin(), cps.end());
  }
  for (const auto& e : extra_emoticons) {
    auto cps = decode_utf8(e);
    if (!cps.empty()) unique.emplace(cps.begin(), cps.end());
  }
  emoticons_.assign(unique.begin(), unique.end());
  std::stable_sort(emoticons_.begin(), emoticons_.end(),
                   [](const auto& a, const auto& b) {
                     return a.size() > b.size();
                   });
}

std::vector<Token> Tokenizer::tokenize(std::string_view raw) const {
  std::u32string text;
  for (char32_t cp : decode_utf8(raw)) {
    if (!is_emoji_modifier(cp)) text.push_back(cp);
  }
  const Span all(text);

  std::vector<Token> tokens;
  size_t pos = 0;
  while (pos < all.size()) {
    if (is_space(all[pos])) {
      ++pos;
      continue;
    }
    size_t chunk_end = pos;
    while (chunk_end < all.size() && !is_space(all[chunk_end])) ++chunk_end;
    const Span chunk = all.substr(pos, chunk_end - pos);
    pos = chunk_end;

    // Already-normalized placeholders survive re-tokenization.
    const std::string chunk_utf8 =
        encode_utf8(std::vector<char32_t>(chunk.begin(), chunk.end()));
    if (std::find(kPlaceholders.begin(), kPlaceholders.end(), chunk_utf8) !=
        kPlaceholders.end()) {
      tokens.push_back(Token::placeholder(chunk_utf8));
      continue;
    }

    size_t i = 0;
    while (i < chunk.size()) {
      const Span rest = chunk.substr(i);
      const char32_t c = rest[0];

      if (is_url_start(rest)) {
        tokens.push_back(Token::placeholder(kUrlTag));
        break;
      }
      if (c == U'@' && rest.size() > 1 && is_word_char(rest[1])) {
        size_t j = 1;
        while (j < rest.size() && j <= kMaxUsernameChars &&
               is_word_char(rest[j])) {
          ++j;
        }
        tokens.push_back(Token::placeholder(kUsernameTag));
        i += j;
        continue;
      }
      if (c == U'#' && rest.size() > 1) {
        tokens.push_back(Token::placeholder(kHashtagTag));
        break;
      }

      bool matched = false;
      for (const auto& emo : emoticons_) {
        if (rest.substr(0, emo.size()) != emo) continue;
        size_t j = emo.size();
        while (j < rest.size() && rest[j] == emo.back()) ++j;
        if (is_word_char(emo.back()) && j < rest.size() &&
            is_word_char(rest[j])) {
          continue;
        }
        if (is_word_char(emo.front()) && i > 0 && is_word_char(chunk[i - 1])) {
          continue;
        }
        Token t;
        t.kind = TokenKind::kEmoticon;
        t.surface = encode_utf8(std::vector<char32_t>(rest.begin(),
                                                      rest.begin() + j));
        t.canonical =
            encode_utf8(std::vector<char32_t>(emo.begin(), emo.end()));
        tokens.push_back(std::move(t));
        i += j;
        matched = true;
        break;
      }
      if (matched) continue;

      if (is_emoji(c)) {
        Token t;
        t.kind = TokenKind::kEmoji;
        t.surface = encode_utf8(c);
        t.canonical = t.surface;
        tokens.push_back(std::move(t));
        ++i;
        continue;
      }
      if (const size_t n = match_number(rest); n > 0) {
        tokens.push_back(Token::placeholder(kNumberTag));
        i += n;
        continue;
      }
      if (is_word_char(c)) {
        size_t j = 1;
        while (j < rest.size() && is_word_char(rest[j])) ++j;
        tokens.push_back(Token::word(normalize_word(rest.substr(0, j))));
        i += j;
        continue;
      }
      ++i;  // punctuation and anything else unrecognized is dropped
    }
  }
  return tokens;
}

std::vector<Token> tokenize(std::string_view raw) {
  static const Tokenizer kDefault;
  return kDefault.tokenize(raw);
}

std::string detokenize(std::span<const Token> tokens) {
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i) out.push_back(' ');
    out += tokens[i].surface;
  }
  return out;
}

}  // namespace dsent
