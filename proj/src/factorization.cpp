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

#include "lyndon/factorization.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "lyndon/error.hpp"
#include "duval_scan.hpp"

namespace lyndon {

Factorization::Factorization(std::size_t text_length, std::vector<std::size_t> boundaries)
    : n_(text_length), boundaries_(std::move(boundaries)) {
  if (boundaries_.empty() || boundaries_.back() != n_)
    throw std::invalid_argument("factorization must end at the text length");
  std::size_t prev = 0;
  for (std::size_t b : boundaries_) {
    if (b <= prev) throw std::invalid_argument("factor boundaries must be strictly increasing");
    m_ = std::max(m_, b - prev);
    prev = b;
  }
}

namespace {

void require_in_alphabet(TextView text, const AlphabetOrdering& ordering) {
  const auto& table = ordering.rank_table();
  for (Byte b : text)
    if (table[b] < 0) throw DataError("symbol outside alphabet: byte " + std::to_string(b));
}

template <typename Key>
Factorization duval(TextView text, Key key) {
  if (text.empty()) throw DataError("empty input");
  std::vector<std::size_t> bounds;
  detail::duval_scan(text, key, [&bounds](std::size_t end) { bounds.push_back(end); });
  return Factorization(text.size(), std::move(bounds));
}

}  // namespace

std::strong_ordering compare(TextView u, TextView v, const AlphabetOrdering& ordering) {
  const std::size_t len = std::min(u.size(), v.size());
  for (std::size_t i = 0; i < len; ++i) {
    const Byte a = ordering.rank(u[i]);
    const Byte b = ordering.rank(v[i]);
    if (a != b) return a <=> b;
  }
  require_in_alphabet(u.subspan(len), ordering);
  require_in_alphabet(v.subspan(len), ordering);
  return u.size() <=> v.size();
}

bool is_lyndon(TextView s, const AlphabetOrdering& ordering) {
  if (s.empty()) throw DataError("empty input");
  require_in_alphabet(s, ordering);
  for (std::size_t i = 1; i < s.size(); ++i)
    if (compare(s, s.subspan(i), ordering) != std::strong_ordering::less) return false;
  return true;
}

Factorization duval_factorize(TextView text, const AlphabetOrdering& ordering) {
  require_in_alphabet(text, ordering);
  const auto& table = ordering.rank_table();
  return duval(text, [&table](Byte b) { return table[b]; });
}

Factorization duval_factorize(TextView text) {
  return duval(text, [](Byte b) { return b; });
}

Factorization oracle_factorize(TextView text, const AlphabetOrdering& ordering) {
  if (text.empty()) throw DataError("empty input");
  require_in_alphabet(text, ordering);
  std::vector<std::size_t> bounds;
  std::size_t start = 0;
  while (start < text.size()) {
    const TextView rest = text.subspan(start);
    std::size_t len = rest.size();
    // Length 1 is always Lyndon, so this terminates.
    while (!is_lyndon(rest.first(len), ordering)) --len;
    if (!bounds.empty()) {
      const std::size_t prev_begin = bounds.size() > 1 ? bounds[bounds.size() - 2] : 0;
      const TextView prev = text.subspan(prev_begin, start - prev_begin);
      if (compare(prev, rest.first(len), ordering) == std::strong_ordering::less)
        throw std::logic_error("oracle produced an increasing factor pair");
    }
    start += len;
    bounds.push_back(start);
  }
  return Factorization(text.size(), std::move(bounds));
}

double percent_2dp(std::size_t part, std::size_t whole) {
  // hundredths of a percent, half-up: floor((2 * 10000 * part + whole) / (2 * whole))
  // (exact for texts below 2^49 bytes)
  const std::uint64_t num = static_cast<std::uint64_t>(part) * 20000 + whole;
  const std::uint64_t den = static_cast<std::uint64_t>(whole) * 2;
  return static_cast<double>(num / den) / 100.0;
}

FactorStats factor_stats(const Factorization& f) {
  return {f.k(), f.m(), percent_2dp(f.m(), f.text_length())};
}

nlohmann::json to_json(const Factorization& f, bool with_boundaries) {
  const auto s = factor_stats(f);
  nlohmann::json j = {{"n", f.text_length()}, {"k", s.k}, {"m", s.m}, {"m_pct", s.m_pct}};
  if (with_boundaries) j["boundaries"] = std::vector<std::size_t>(f.boundaries().begin(), f.boundaries().end());
  return j;
}

}  // namespace lyndon
