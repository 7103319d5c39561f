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

#include "dsent/corpus.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "dsent/errors.h"
#include "dsent/utf8.h"

namespace dsent {
namespace {

LabeledCorpus parse_stream(std::istream& in) {
  LabeledCorpus corpus;
  std::string line;
  while (std::getline(in, line)) {
    const uint64_t lineno = ++corpus.lines_read;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!is_valid_utf8(line)) {
      corpus.malformed.push_back({lineno, "invalid UTF-8"});
      continue;
    }
    const size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      corpus.malformed.push_back({lineno, "missing tab separator"});
      continue;
    }
    const auto label = parse_polarity_label(std::string_view(line).substr(0, tab));
    if (!label) {
      corpus.malformed.push_back({lineno, "label must be pos or neg"});
      continue;
    }
    corpus.records.push_back({*label, line.substr(tab + 1), lineno});
  }
  return corpus;
}

}  // namespace

size_t LabeledCorpus::count(Polarity p) const {
  return std::count_if(records.begin(), records.end(),
                       [p](const LabeledRecord& r) { return r.label == p; });
}

LabeledCorpus read_labeled_corpus(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open corpus " + path);
  return parse_stream(in);
}

LabeledCorpus parse_labeled_corpus(const std::string& text) {
  std::istringstream in(text);
  return parse_stream(in);
}

}  // namespace dsent
