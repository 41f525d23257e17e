// Copyright 2026 The lyndon-reorder Authors. All Rights Reserved.
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

#pragma once

#include <cstddef>

#include "lyndon/text.hpp"

namespace lyndon::detail {

// Duval's algorithm over keys `key(text[i])`, reporting each factor end
// offset to `emit` in order. Within a round starting at `start`,
// text[start..j) is a prefix of w^e·w' with w Lyndon of length j - i.
// `text` must be non-empty and every key valid.
template <typename Key, typename Emit>
void duval_scan(TextView text, Key key, Emit emit) {
  const std::size_t n = text.size();
  std::size_t start = 0;
  while (start < n) {
    std::size_t i = start;
    std::size_t j = start + 1;
    while (j < n) {
      const auto a = key(text[i]);
      const auto b = key(text[j]);
      if (a > b) break;
      i = (a < b) ? start : i + 1;
      ++j;
    }
    const std::size_t period = j - i;
    while (start <= i) {
      start += period;
      emit(start);
    }
  }
}

}  // namespace lyndon::detail
