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

#include "lyndon/alphabet.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <utility>

#include "lyndon/error.hpp"

namespace lyndon {

Alphabet::Alphabet(std::vector<Byte> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw DataError("empty alphabet");
  index_.fill(-1);
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (i > 0 && symbols_[i - 1] >= symbols_[i])
      throw DataError("alphabet symbols must be strictly increasing");
    index_[symbols_[i]] = static_cast<std::int16_t>(i);
  }
}

AlphabetOrdering::AlphabetOrdering(Alphabet alphabet, std::vector<Byte> perm)
    : alphabet_(std::move(alphabet)), perm_(std::move(perm)) {
  rank_.fill(-1);
  for (std::size_t i = 0; i < perm_.size(); ++i) rank_[perm_[i]] = static_cast<std::int16_t>(i);
}

Byte AlphabetOrdering::rank(Byte b) const {
  if (rank_[b] < 0) throw DataError("symbol outside alphabet: byte " + std::to_string(b));
  return static_cast<Byte>(rank_[b]);
}

bool AlphabetOrdering::is_identity() const noexcept {
  return std::equal(perm_.begin(), perm_.end(), alphabet_.symbols().begin());
}

Alphabet detect_alphabet(TextView text) {
  if (text.empty()) throw DataError("empty input");
  std::array<bool, 256> seen{};
  for (Byte b : text) seen[b] = true;
  std::vector<Byte> symbols;
  for (int c = 0; c < 256; ++c)
    if (seen[c]) symbols.push_back(static_cast<Byte>(c));
  return Alphabet(std::move(symbols));
}

AlphabetOrdering identity_ordering(const Alphabet& alphabet) {
  auto s = alphabet.symbols();
  return ordering_from_sequence(alphabet, s);
}

AlphabetOrdering ordering_from_sequence(const Alphabet& alphabet, std::span<const Byte> seq) {
  if (seq.size() != alphabet.sigma()) throw DataError("not a permutation of the alphabet");
  std::array<bool, 256> used{};
  for (Byte b : seq) {
    if (!alphabet.contains(b) || used[b]) throw DataError("not a permutation of the alphabet");
    used[b] = true;
  }
  return AlphabetOrdering(alphabet, std::vector<Byte>(seq.begin(), seq.end()));
}

ParikhVector parikh_vector(TextView text, const Alphabet& alphabet) {
  std::array<std::uint64_t, 256> hist{};
  for (Byte b : text) ++hist[b];
  ParikhVector p{alphabet, std::vector<std::uint64_t>(alphabet.sigma(), 0)};
  std::uint64_t covered = 0;
  for (std::size_t i = 0; i < alphabet.sigma(); ++i) {
    p.counts[i] = hist[alphabet.symbols()[i]];
    covered += p.counts[i];
  }
  if (covered != text.size()) throw DataError("symbol outside alphabet");
  return p;
}

namespace {

// `before(a, b)` over symbol indices; stable sort keeps native order on ties.
template <typename Before>
AlphabetOrdering sorted_by_count(const ParikhVector& p, Before before) {
  std::vector<std::size_t> idx(p.alphabet.sigma());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return before(p.counts[a], p.counts[b]); });
  std::vector<Byte> seq;
  seq.reserve(idx.size());
  for (std::size_t i : idx) seq.push_back(p.alphabet.symbols()[i]);
  return ordering_from_sequence(p.alphabet, seq);
}

// Unbiased draw in [0, bound] from a 64-bit engine.
std::uint64_t draw_upto(std::mt19937_64& gen, std::uint64_t bound) {
  const std::uint64_t range = bound + 1;
  if (range == 0) return gen();
  const std::uint64_t rem = (0 - range) % range;  // 2^64 mod range
  for (;;) {
    const std::uint64_t x = gen();
    if (rem == 0 || x < 0 - rem) return x % range;
  }
}

}  // namespace

AlphabetOrdering mfs_ordering(const ParikhVector& p) {
  return sorted_by_count(p, [](std::uint64_t a, std::uint64_t b) { return a > b; });
}

AlphabetOrdering lfs_ordering(const ParikhVector& p) {
  return sorted_by_count(p, [](std::uint64_t a, std::uint64_t b) { return a < b; });
}

AlphabetOrdering random_ordering(const Alphabet& alphabet, std::uint64_t seed) {
  std::vector<Byte> seq(alphabet.symbols().begin(), alphabet.symbols().end());
  std::mt19937_64 gen(seed);
  for (std::size_t i = seq.size(); i-- > 1;) {
    std::swap(seq[i], seq[draw_upto(gen, i)]);
  }
  return ordering_from_sequence(alphabet, seq);
}

Text remap_text(TextView text, const AlphabetOrdering& ordering) {
  const auto& table = ordering.rank_table();
  Text out(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto r = table[text[i]];
    if (r < 0) throw DataError("symbol outside alphabet: byte " + std::to_string(text[i]));
    out[i] = static_cast<Byte>(r);
  }
  return out;
}

}  // namespace lyndon
