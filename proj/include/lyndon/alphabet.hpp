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

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lyndon/text.hpp"

namespace lyndon {

// The distinct bytes of a text in native (ascending) order.
class Alphabet {
 public:
  // Throws DataError unless `symbols` is non-empty and strictly increasing.
  explicit Alphabet(std::vector<Byte> symbols);

  std::span<const Byte> symbols() const noexcept { return symbols_; }
  std::size_t sigma() const noexcept { return symbols_.size(); }
  bool contains(Byte b) const noexcept { return index_[b] >= 0; }

  // Position of `b` in symbols(); -1 when absent.
  int index_of(Byte b) const noexcept { return index_[b]; }

  friend bool operator==(const Alphabet& a, const Alphabet& b) noexcept {
    return a.symbols_ == b.symbols_;
  }

 private:
  std::vector<Byte> symbols_;
  std::array<std::int16_t, 256> index_;
};

// A total order over the symbols of an alphabet. perm()[i] is the symbol
// ranked i (lowest first); rank() is its inverse.
class AlphabetOrdering {
 public:
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::span<const Byte> perm() const noexcept { return perm_; }
  std::size_t sigma() const noexcept { return perm_.size(); }

  // Throws DataError when `b` is not in the alphabet.
  Byte rank(Byte b) const;

  // 256-entry table, -1 for bytes outside the alphabet.
  const std::array<std::int16_t, 256>& rank_table() const noexcept { return rank_; }

  bool is_identity() const noexcept;

  friend bool operator==(const AlphabetOrdering& a, const AlphabetOrdering& b) noexcept {
    return a.alphabet_ == b.alphabet_ && a.perm_ == b.perm_;
  }

 private:
  friend AlphabetOrdering ordering_from_sequence(const Alphabet&, std::span<const Byte>);
  AlphabetOrdering(Alphabet alphabet, std::vector<Byte> perm);

  Alphabet alphabet_;
  std::vector<Byte> perm_;
  std::array<std::int16_t, 256> rank_;
};

// Occurrence counts aligned with alphabet().symbols().
struct ParikhVector {
  Alphabet alphabet;
  std::vector<std::uint64_t> counts;
};

// Throws DataError("empty input") on an empty text.
Alphabet detect_alphabet(TextView text);

AlphabetOrdering identity_ordering(const Alphabet& alphabet);

// Throws DataError("not a permutation of the alphabet") unless `seq` lists
// every symbol of `alphabet` exactly once.
AlphabetOrdering ordering_from_sequence(const Alphabet& alphabet, std::span<const Byte> seq);

// Throws DataError("symbol outside alphabet") on a foreign byte.
ParikhVector parikh_vector(TextView text, const Alphabet& alphabet);

// Most frequent symbol first; equal counts keep native symbol order.
AlphabetOrdering mfs_ordering(const ParikhVector& p);

// Least frequent symbol first; equal counts keep native symbol order.
AlphabetOrdering lfs_ordering(const ParikhVector& p);

/// Uniformly random ordering, reproducible from `seed` on every platform.
///
/// The generator is std::mt19937_64 seeded with `seed` directly (its output
/// sequence is fixed by the standard). The shuffle is Fisher-Yates walking
/// from the last position down, drawing j in [0, i] by rejection sampling on
/// the raw 64-bit output: with range = i + 1 and
/// limit = 2^64 - (2^64 mod range), draws x >= limit are discarded and
/// j = x mod range. Standard-library distributions are avoided because their
/// algorithms are implementation-defined.
AlphabetOrdering random_ordering(const Alphabet& alphabet, std::uint64_t seed);

// Replaces every byte by its rank. Factorizing the result under the identity
// ordering of its own alphabet yields the same boundaries as factorizing
// `text` under `ordering`. Throws DataError on a foreign byte.
Text remap_text(TextView text, const AlphabetOrdering& ordering);

}  // namespace lyndon
