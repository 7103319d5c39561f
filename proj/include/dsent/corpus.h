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

#ifndef DSENT_CORPUS_H_
#define DSENT_CORPUS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "dsent/polarity.h"

namespace dsent {

struct LabeledRecord {
  Polarity label;
  std::string text;
  uint64_t line = 0;
};

struct MalformedLine {
  uint64_t line;
  std::string reason;
};

struct LabeledCorpus {
  std::vector<LabeledRecord> records;
  std::vector<MalformedLine> malformed;
  uint64_t lines_read = 0;

  size_t count(Polarity p) const;
};

// Reads a `label<TAB>text` corpus. Malformed lines (unknown label, missing
// tab, invalid UTF-8, blank) are collected rather than fatal.
// Throws IoError if the file cannot be opened.
LabeledCorpus read_labeled_corpus(const std::string& path);
LabeledCorpus parse_labeled_corpus(const std::string& text);

}  // namespace dsent

#endif  // DSENT_CORPUS_H_
