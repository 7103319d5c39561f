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

#ifndef DSENT_FINGERPRINT_H_
#define DSENT_FINGERPRINT_H_

#include <bit>
#include <cstdint>
#include <string_view>

namespace dsent {

// 64-bit FNV-1a, used for model-file checksums and representation
// fingerprints.
class Fnv1a {
 public:
  void update(std::string_view bytes) {
    for (unsigned char c : bytes) {
      hash_ ^= c;
      hash_ *= 0x100000001b3ULL;
    }
  }
  void update_u64(uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      const char byte = static_cast<char>((v >> (8 * i)) & 0xFF);
      update(std::string_view(&byte, 1));
    }
  }
  void update_double(double v) { update_u64(std::bit_cast<uint64_t>(v)); }
  // Length-prefixed so ("ab","c") and ("a","bc") hash differently.
  void update_string(std::string_view s) {
    update_u64(s.size());
    update(s);
  }

  uint64_t digest() const { return hash_; }

 private:
  uint64_t hash_ = 0xcbf29ce484222325ULL;
};

}  // namespace dsent

#endif  // DSENT_FINGERPRINT_H_
