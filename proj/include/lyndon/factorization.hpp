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

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "json.hpp"

#include "lyndon/alphabet.hpp"
#include "lyndon/text.hpp"

namespace lyndon {

/// Lyndon factorization of a text, stored as factor end offsets.
///
/// Factor i spans [boundaries()[i-1], boundaries()[i]) with an implicit
/// leading 0; the last boundary equals the text length.
class Factorization {
 public:
  // Throws std::invalid_argument unless `boundaries` is non-empty, strictly
  // increasing, starts above 0 and ends at `text_length`.
  Factorization(std::size_t text_length, std::vector<std::size_t> boundaries);

  std::size_t text_length() const noexcept { return n_; }
  std::span<const std::size_t> boundaries() const noexcept { return boundaries_; }
  std::size_t k() const noexcept { return boundaries_.size(); }
  std::size_t m() const noexcept { return m_; }

  std::size_t factor_begin(std::size_t i) const noexcept { return i == 0 ? 0 : boundaries_[i - 1]; }
  std::size_t factor_length(std::size_t i) const noexcept {
    return boundaries_[i] - factor_begin(i);
  }

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  std::size_t n_;
  std::vector<std::size_t> boundaries_;
  std::size_t m_ = 0;
};

struct FactorStats {
  std::size_t k;
  std::size_t m;
  double m_pct;  // 100 * m / n, rounded half-up to two decimals
};

// Lexicographic comparison under `ordering`; a proper prefix is less.
// Throws DataError on a byte outside the ordering's alphabet.
std::strong_ordering compare(TextView u, TextView v, const AlphabetOrdering& ordering);

// Definition check: strictly smaller than every proper suffix. Quadratic;
// meant for tests and oracles. Throws DataError on empty input.
bool is_lyndon(TextView s, const AlphabetOrdering& ordering);

// Duval's algorithm under `ordering`. Linear time, constant extra space
// besides the boundary list.
Factorization duval_factorize(TextView text, const AlphabetOrdering& ordering);

// Duval's algorithm under native byte order. Use on texts already passed
// through remap_text when many queries share one ordering.
Factorization duval_factorize(TextView text);

// Strips the longest Lyndon prefix until the text is consumed, checking
// every candidate prefix with is_lyndon. Cubic; for small inputs only.
Factorization oracle_factorize(TextView text, const AlphabetOrdering& ordering);

FactorStats factor_stats(const Factorization& f);

// Percentage of `part` in `whole`, rounded half-up to two decimals.
double percent_2dp(std::size_t part, std::size_t whole);

// { "n", "k", "m", "m_pct" [, "boundaries"] }
nlohmann::json to_json(const Factorization& f, bool with_boundaries);

}  // namespace lyndon
