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

#include "lyndon/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <iterator>

#include "lyndon/error.hpp"

namespace lyndon {

Text load_text(const std::filesystem::path& path, std::optional<std::size_t> max_bytes) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::error_code ec;
  const auto file_size = std::filesystem::file_size(path, ec);
  if (ec) throw IoError("cannot stat " + path.string() + ": " + ec.message());
  const std::size_t want = max_bytes ? std::min<std::size_t>(*max_bytes, file_size) : file_size;
  Text text(want);
  in.read(reinterpret_cast<char*>(text.data()), static_cast<std::streamsize>(want));
  if (static_cast<std::size_t>(in.gcount()) != want) throw IoError("short read from " + path.string());
  if (text.empty()) throw DataError("empty input: " + path.string());
  return text;
}

DatasetInfo dataset_info(const std::filesystem::path& path, TextView text) {
  const Alphabet alphabet = detect_alphabet(text);
  constexpr std::size_t mib = std::size_t{1} << 20;
  return {path.string(), text.size(), alphabet.sigma(), (text.size() + mib / 2) / mib};
}

nlohmann::json to_json(const DatasetInfo& info) {
  return {{"path", info.path}, {"n", info.n}, {"sigma", info.sigma}, {"size_mb", info.size_mb}};
}

AlphabetOrdering parse_permutation(std::string_view content, const Alphabet& alphabet) {
  std::vector<Byte> seq;
  const auto first = std::find_if_not(content.begin(), content.end(),
                                      [](unsigned char c) { return std::isspace(c); });
  if (first != content.end() && *first == '[') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(content);
    } catch (const nlohmann::json::exception& e) {
      throw DataError(std::string("malformed permutation JSON: ") + e.what());
    }
    if (!j.is_array()) throw DataError("permutation JSON must be an array");
    for (const auto& v : j) {
      if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() > 255)
        throw DataError("permutation entries must be integers in 0..255");
      seq.push_back(static_cast<Byte>(v.get<int>()));
    }
  } else {
    std::size_t pos = 0;
    while (pos < content.size()) {
      while (pos < content.size() && std::isspace(static_cast<unsigned char>(content[pos]))) ++pos;
      if (pos == content.size()) break;
      std::size_t end = pos;
      while (end < content.size() && !std::isspace(static_cast<unsigned char>(content[end]))) ++end;
      const std::string_view token = content.substr(pos, end - pos);
      unsigned value = 0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc{} || ptr != token.data() + token.size() || value > 255)
        throw DataError("malformed permutation entry '" + std::string(token) + "'");
      seq.push_back(static_cast<Byte>(value));
      pos = end;
    }
  }
  return ordering_from_sequence(alphabet, seq);
}

std::string format_permutation(const AlphabetOrdering& ordering) {
  std::string out;
  for (std::size_t i = 0; i < ordering.sigma(); ++i) {
    if (i) out += ' ';
    out += std::to_string(ordering.perm()[i]);
  }
  out += '\n';
  return out;
}

AlphabetOrdering read_permutation(const std::filesystem::path& path, const Alphabet& alphabet) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  const std::string content{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_permutation(content, alphabet);
}

void write_permutation(const AlphabetOrdering& ordering, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << format_permutation(ordering);
  if (!out.flush()) throw IoError("cannot write " + path.string());
}

}  // namespace lyndon
