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

#ifndef DSENT_POLARITY_H_
#define DSENT_POLARITY_H_

#include <optional>
#include <string_view>

namespace dsent {

// Binary sentiment label. There is deliberately no neutral value.
enum class Polarity { kPositive, kNegative };

// Corpus label form: "pos" / "neg".
constexpr std::string_view polarity_label(Polarity p) {
  return p == Polarity::kPositive ? "pos" : "neg";
}

constexpr std::optional<Polarity> parse_polarity_label(std::string_view s) {
  if (s == "pos") return Polarity::kPositive;
  if (s == "neg") return Polarity::kNegative;
  return std::nullopt;
}

constexpr Polarity opposite(Polarity p) {
  return p == Polarity::kPositive ? Polarity::kNegative : Polarity::kPositive;
}

}  // namespace dsent

#endif  // DSENT_POLARITY_H_
