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
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "lyndon/alphabet.hpp"
#include "lyndon/text.hpp"

namespace lyndon {

struct DatasetInfo {
  std::string path;
  std::size_t n = 0;
  std::size_t sigma = 0;
  std::size_t size_mb = 0;  // n / 2^20, rounded to nearest
};

// Reads the whole file, or its first `max_bytes` bytes, as raw bytes.
// Throws IoError when the file cannot be read and DataError when the
// result is empty.
Text load_text(const std::filesystem::path& path, std::optional<std::size_t> max_bytes = std::nullopt);

DatasetInfo dataset_info(const std::filesystem::path& path, TextView text);

nlohmann::json to_json(const DatasetInfo& info);

// Permutation text: whitespace-separated decimal byte values, lowest rank
// first. A JSON array of the same integers is accepted on input.
AlphabetOrdering parse_permutation(std::string_view content, const Alphabet& alphabet);
std::string format_permutation(const AlphabetOrdering& ordering);

AlphabetOrdering read_permutation(const std::filesystem::path& path, const Alphabet& alphabet);
void write_permutation(const AlphabetOrdering& ordering, const std::filesystem::path& path);

}  // namespace lyndon
