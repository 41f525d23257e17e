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

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace lyndon {

using Byte = std::uint8_t;

// Owning, immutable-by-convention byte string.
using Text = std::vector<Byte>;

// Non-owning view over a text; every algorithm takes one of these.
using TextView = std::span<const Byte>;

inline TextView as_bytes(std::string_view s) noexcept {
  return {reinterpret_cast<const Byte*>(s.data()), s.size()};
}

inline Text to_text(std::string_view s) {
  auto v = as_bytes(s);
  return Text(v.begin(), v.end());
}

}  // namespace lyndon
