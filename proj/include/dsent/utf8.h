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

#ifndef DSENT_UTF8_H_
#define DSENT_UTF8_H_

#include <string>
#include <string_view>
#include <vector>

namespace dsent {

// Replacement character substituted for malformed byte sequences.
inline constexpr char32_t kReplacementChar = 0xFFFD;

// Returns true if `text` is well-formed UTF-8 (no overlongs, no surrogates).
bool is_valid_utf8(std::string_view text);

// Decodes `text` into code points. Malformed sequences decode to
// kReplacementChar one byte at a time, so decoding never fails.
std::vector<char32_t> decode_utf8(std::string_view text);

void append_utf8(char32_t cp, std::string* out);
std::string encode_utf8(char32_t cp);
std::string encode_utf8(const std::vector<char32_t>& cps);

}  // namespace dsent

#endif  // DSENT_UTF8_H_
