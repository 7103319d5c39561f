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

#include "dsent/lexicon.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "dsent/errors.h"
#include "dsent/utf8.h"

namespace dsent {
namespace {

std::string lowercase(const std::string& s) {
  std::string out;
  for (char32_t cp : decode_utf8(s)) append_utf8(to_lower(cp), &out);
  return out;
}

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::optional<char32_t> parse_code_point(const std::string& s) {
  if (s.size() > 2 && (s[0] == 'U' || s[0] == 'u') && s[1] == '+') {
    try {
      size_t used = 0;
      const unsigned long v = std::stoul(s.substr(2), &used, 16);
      if (used == s.size() - 2 && v <= 0x10FFFF) return static_cast<char32_t>(v);
    } catch (const std::exception&) {
    }
    return std::nullopt;
  }
  const auto cps = decode_utf8(s);
  if (cps.size() == 1 && is_emoji(cps[0])) return cps[0];
  return std::nullopt;
}

}  // namespace

MarkerLexicon MarkerLexicon::make(std::set<std::string> positive_emoticons,
                                  std::set<std::string> negative_emoticons,
                                  std::set<char32_t> positive_emojis,
                                  std::set<char32_t> negative_emojis) {
  for (const auto& e : positive_emoticons) {
    if (negative_emoticons.count(e)) {
      throw InvalidArgument("emoticon " + e + " listed as both positive and negative");
    }
  }
  for (char32_t cp : positive_emojis) {
    if (negative_emojis.count(cp)) {
      throw InvalidArgument("emoji " + encode_utf8(cp) +
                            " listed as both positive and negative");
    }
  }
  MarkerLexicon lex;
  lex.pos_emoticons_ = std::move(positive_emoticons);
  lex.neg_emoticons_ = std::move(negative_emoticons);
  lex.pos_emojis_ = std::move(positive_emojis);
  lex.neg_emojis_ = std::move(negative_emojis);
  return lex;
}

std::vector<std::string> MarkerLexicon::all_emoticons() const {
  std::vector<std::string> out(pos_emoticons_.begin(), pos_emoticons_.end());
  out.insert(out.end(), neg_emoticons_.begin(), neg_emoticons_.end());
  return out;
}

const MarkerLexicon& default_marker_lexicon() {
  static const MarkerLexicon kLexicon = MarkerLexicon::make(
      {":)", ":-)", ":D", "=)"}, {":(", ":-("},
      {0x1F60A, 0x1F60B, 0x1F60D, 0x1F603, 0x1F606, 0x1F600, 0x1F61D},
      {0x1F620, 0x1F627, 0x1F61E, 0x1F628, 0x1F626, 0x1F623, 0x1F614, 0x1F629,
       0x1F612, 0x1F621, 0x2639, 0x1F61F});
  return kLexicon;
}

std::optional<Polarity> classify_marker(const Token& token,
                                        const MarkerLexicon& lex) {
  switch (token.kind) {
    case TokenKind::kEmoticon:
      if (lex.positive_emoticons().count(token.canonical)) return Polarity::kPositive;
      if (lex.negative_emoticons().count(token.canonical)) return Polarity::kNegative;
      return std::nullopt;
    case TokenKind::kEmoji: {
      const auto cps = decode_utf8(token.canonical);
      if (cps.size() != 1) return std::nullopt;
      if (lex.positive_emojis().count(cps[0])) return Polarity::kPositive;
      if (lex.negative_emojis().count(cps[0])) return Polarity::kNegative;
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

MarkerLexicon load_marker_lexicon(const std::string& path) {
  std::istringstream in(read_file(path));
  std::set<std::string> pos_emo, neg_emo;
  std::set<char32_t> pos_emoji, neg_emoji;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip_cr(line);
    if (line.empty() || line[0] == '#') continue;
    const size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw ParseError(path, lineno, "expected <pos|neg><TAB><marker>");
    }
    const auto polarity = parse_polarity_label(line.substr(0, tab));
    const std::string marker = line.substr(tab + 1);
    if (!polarity) throw ParseError(path, lineno, "label must be pos or neg");
    if (marker.empty()) throw ParseError(path, lineno, "empty marker");
    const bool positive = *polarity == Polarity::kPositive;
    if (const auto cp = parse_code_point(marker)) {
      (positive ? pos_emoji : neg_emoji).insert(*cp);
    } else {
      if (marker.find_first_of(" \t") != std::string::npos) {
        throw ParseError(path, lineno, "marker contains whitespace");
      }
      (positive ? pos_emo : neg_emo).insert(marker);
    }
  }
  try {
    return MarkerLexicon::make(std::move(pos_emo), std::move(neg_emo),
                               std::move(pos_emoji), std::move(neg_emoji));
  } catch (const InvalidArgument& e) {
    throw ParseError(path, 0, e.what());
  }
}

int SentimentLexicon::value(const std::string& word) const {
  const auto it = word_values.find(word);
  return it == word_values.end() ? 0 : it->second;
}

bool SentimentLexicon::contains(const std::string& word) const {
  return word_values.count(word) || intensifiers.count(word) ||
         downtoners.count(word) || negations.count(word);
}

SentimentLexicon parse_sentiment_lexicon(const std::string& text,
                                         const std::string& source) {
  SentimentLexicon lex;
  std::istringstream in(text);
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip_cr(line);
    if (line.empty() || line[0] == '#') continue;
    const size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) {
      throw ParseError(source, lineno, "expected <word><TAB><tag>");
    }
    const std::string word = lowercase(line.substr(0, tab));
    const std::string tag = line.substr(tab + 1);
    if (lex.contains(word)) {
      throw ParseError(source, lineno, "duplicate word '" + word + "'");
    }
    if (tag == "+1") {
      lex.word_values[word] = 1;
    } else if (tag == "-1") {
      lex.word_values[word] = -1;
    } else if (tag == "INT") {
      lex.intensifiers.insert(word);
    } else if (tag == "DOWN") {
      lex.downtoners.insert(word);
    } else if (tag == "NEG") {
      lex.negations.insert(word);
    } else {
      throw ParseError(source, lineno, "unknown tag '" + tag + "'");
    }
  }
  return lex;
}

SentimentLexicon load_sentiment_lexicon(const std::string& path) {
  return parse_sentiment_lexicon(read_file(path), path);
}

const SentimentLexicon& default_sentiment_lexicon() {
  static const SentimentLexicon kLexicon = parse_sentiment_lexicon(
      "bom\t+1\nboa\t+1\nótimo\t+1\nótima\t+1\nexcelente\t+1\nlindo\t+1\n"
      "linda\t+1\nfeliz\t+1\namo\t+1\nadoro\t+1\nmaravilhoso\t+1\n"
      "legal\t+1\nperfeito\t+1\nrecomendo\t+1\nmelhor\t+1\n"
      "ruim\t-1\npéssimo\t-1\npéssima\t-1\nhorrível\t-1\ntriste\t-1\n"
      "odeio\t-1\nchato\t-1\nchata\t-1\npior\t-1\nterrível\t-1\nfeio\t-1\n"
      "lixo\t-1\ndefeito\t-1\ndecepcionado\t-1\n"
      "muito\tINT\ndemais\tINT\nsuper\tINT\nbastante\tINT\nextremamente\tINT\n"
      "pouco\tDOWN\nmeio\tDOWN\nquase\tDOWN\nlevemente\tDOWN\n"
      "não\tNEG\nnao\tNEG\nnem\tNEG\nnunca\tNEG\njamais\tNEG\n",
      "<builtin>");
  return kLexicon;
}

}  // namespace dsent
