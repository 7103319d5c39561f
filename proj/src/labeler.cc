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

#include "dsent/labeler.h"

#include <filesystem>
#include <fstream>
#include <future>
#include <istream>
#include <numeric>
#include <ostream>
#include <unordered_set>

#include "json.hpp"

#include "dsent/errors.h"
#include "dsent/utf8.h"

namespace dsent {
namespace {

// Output of the parallel stage for one message: a corpus line or a reason.
using WorkResult = std::variant<std::pair<Polarity, std::string>, DiscardReason>;

WorkResult process(const Tokenizer& tokenizer, const MarkerLexicon& lex,
                   RawMessage msg) {
  TokenizedDocument doc{std::move(msg.id), tokenizer.tokenize(msg.text)};
  auto outcome = label_document(doc, lex);
  if (auto* reason = std::get_if<DiscardReason>(&outcome)) return *reason;
  const auto& kept = std::get<LabeledDocument>(outcome);
  return std::make_pair(kept.polarity, format_corpus_line(kept));
}

}  // namespace

std::string_view discard_reason_name(DiscardReason r) {
  switch (r) {
    case DiscardReason::kMixed:
      return "mixed";
    case DiscardReason::kNoMarker:
      return "no_marker";
    case DiscardReason::kTooShort:
      return "too_short";
  }
  return "unknown";
}

uint64_t CorpusStats::discarded_total() const {
  return std::accumulate(discarded.begin(), discarded.end(), uint64_t{0});
}

bool CorpusStats::conserved() const {
  return kept_positive + kept_negative + discarded_total() == total_seen;
}

LabelOutcome label_document(const TokenizedDocument& doc,
                            const MarkerLexicon& lex) {
  size_t positive = 0;
  size_t negative = 0;
  LabeledDocument kept;
  kept.id = doc.id;
  for (const Token& t : doc.tokens) {
    if (const auto p = classify_marker(t, lex)) {
      ++(*p == Polarity::kPositive ? positive : negative);
    } else {
      kept.tokens.push_back(t);
    }
  }
  if (positive > 0 && negative > 0) return DiscardReason::kMixed;
  if (positive == 0 && negative == 0) return DiscardReason::kNoMarker;
  if (kept.tokens.size() < kMinDocumentTokens) return DiscardReason::kTooShort;
  kept.polarity = positive > 0 ? Polarity::kPositive : Polarity::kNegative;
  return kept;
}

std::optional<RawMessage> parse_raw_line(std::string_view line, bool json,
                                         uint64_t line_number) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  if (!is_valid_utf8(line)) return std::nullopt;
  if (!json) return RawMessage{std::to_string(line_number), std::string(line)};

  const auto record = nlohmann::json::parse(line, nullptr, false);
  if (record.is_discarded() || !record.is_object()) return std::nullopt;
  const auto text = record.find("text");
  if (text == record.end() || !text->is_string()) return std::nullopt;
  RawMessage msg;
  msg.text = text->get<std::string>();
  const auto id = record.find("id");
  if (id == record.end() || id->is_null()) {
    msg.id = std::to_string(line_number);
  } else if (id->is_string()) {
    msg.id = id->get<std::string>();
  } else {
    msg.id = id->dump();
  }
  return msg;
}

std::string format_corpus_line(const LabeledDocument& doc) {
  std::string line(polarity_label(doc.polarity));
  line.push_back('\t');
  line += detokenize(doc.tokens);
  return line;
}

CorpusStats build_corpus(std::istream& in, std::ostream& out,
                         const MarkerLexicon& lex,
                         const BuildOptions& options) {
  const auto extra = lex.all_emoticons();
  const Tokenizer tokenizer(extra);
  const bool json = in.peek() == '{';
  const unsigned threads = std::max(1u, options.threads);
  const size_t batch_size = std::max<size_t>(1, options.batch_size);

  CorpusStats stats;
  std::unordered_set<std::string> seen;
  std::string line;
  uint64_t line_number = 0;
  bool eof = false;

  while (!eof) {
    std::vector<RawMessage> batch;
    while (batch.size() < batch_size) {
      if (!std::getline(in, line)) {
        eof = true;
        break;
      }
      ++line_number;
      auto msg = parse_raw_line(line, json, line_number);
      if (!msg) {
        ++stats.malformed;
        continue;
      }
      if (options.dedup && !seen.insert(msg->text).second) {
        ++stats.duplicates;
        continue;
      }
      batch.push_back(std::move(*msg));
    }
    if (in.bad()) throw IoError("read error on corpus input");

    std::vector<WorkResult> results(batch.size());
    const auto work = [&](size_t begin, size_t end) {
      for (size_t i = begin; i < end; ++i) {
        results[i] = process(tokenizer, lex, std::move(batch[i]));
      }
    };
    if (threads == 1 || batch.size() < 2 * threads) {
      work(0, batch.size());
    } else {
      std::vector<std::future<void>> jobs;
      const size_t per = (batch.size() + threads - 1) / threads;
      for (size_t begin = 0; begin < batch.size(); begin += per) {
        jobs.push_back(std::async(std::launch::async, work, begin,
                                  std::min(batch.size(), begin + per)));
      }
      for (auto& j : jobs) j.get();
    }

    for (auto& r : results) {
      ++stats.total_seen;
      if (auto* reason = std::get_if<DiscardReason>(&r)) {
        ++stats.discarded[static_cast<size_t>(*reason)];
        continue;
      }
      auto& [polarity, text] = std::get<0>(r);
      ++(polarity == Polarity::kPositive ? stats.kept_positive
                                         : stats.kept_negative);
      out << text << '\n';
    }
    if (!out) throw IoError("write error on corpus output");
  }
  out.flush();
  if (!out) throw IoError("write error on corpus output");
  return stats;
}

CorpusStats build_corpus_file(const std::string& input_path,
                              const std::string& output_path,
                              const MarkerLexicon& lex,
                              const BuildOptions& options) {
  std::ifstream in(input_path, std::ios::binary);
  if (!in) throw IoError("cannot open input " + input_path);
  const std::string tmp_path = output_path + ".partial";
  try {
    CorpusStats stats;
    {
      std::ofstream out(tmp_path, std::ios::binary | std::ios::trunc);
      if (!out) throw IoError("cannot open output " + output_path);
      stats = build_corpus(in, out, lex, options);
      out.close();
      if (!out) throw IoError("write error on " + output_path);
    }
    std::filesystem::rename(tmp_path, output_path);
    return stats;
  } catch (...) {
    std::error_code ec;
    std::filesystem::remove(tmp_path, ec);
    throw;
  }
}

}  // namespace dsent
