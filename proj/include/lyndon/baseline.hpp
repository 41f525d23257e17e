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
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "lyndon/strategies.hpp"
#include "lyndon/text.hpp"

namespace lyndon {

inline constexpr std::size_t kDefaultSamples = 100;

struct BaselineSample {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  std::size_t k = 0;
  std::size_t m = 0;
  double m_pct = 0;

  friend bool operator==(const BaselineSample&, const BaselineSample&) = default;
};

// Factorization statistics of `n_samples` uniformly random orderings of a
// text. Sample i uses seed base_seed + i (mod 2^64).
struct BaselineDistribution {
  std::size_t n_samples = 0;
  std::uint64_t base_seed = 0;
  std::size_t text_length = 0;
  std::vector<BaselineSample> samples;

  std::vector<double> k_values() const;
  std::vector<double> m_pct_values() const;

  friend bool operator==(const BaselineDistribution&, const BaselineDistribution&) = default;
};

// Five-number summary.
struct Summary {
  double min = 0, q1 = 0, median = 0, q3 = 0, max = 0;
  friend bool operator==(const Summary&, const Summary&) = default;
};

enum class Side { above_q3, below_q1, inside };

struct Verdict {
  bool effective = false;
  Side side = Side::inside;
  double candidate_value = 0;
  Direction direction = Direction::maximize;
  Summary summary;
};

/// Draws the baseline. Samples are independent and written to fixed slots,
/// so the result is identical for every `threads` value.
/// Throws std::invalid_argument when n_samples == 0.
BaselineDistribution sample_baseline(TextView text, std::size_t n_samples, std::uint64_t base_seed,
                                     unsigned threads = 1);

// Min and max are exact. Quartiles interpolate linearly on the sorted values
// at position (n - 1) * p. Throws std::invalid_argument on empty input.
Summary summarize(std::span<const double> values);

// maximize: effective iff candidate > q3. minimize: effective iff candidate < q1.
Verdict effectiveness_verdict(double candidate, const Summary& summary, Direction direction);

std::string_view to_string(Side side);
std::string_view to_string(Direction direction);

// Header `sample,seed,k,m,m_pct`, one row per sample.
void write_baseline_csv(std::ostream& out, const BaselineDistribution& d);

// { "metric", "min", "q1", "median", "q3", "max" }
nlohmann::json to_json(const Summary& s, std::string_view metric);
// Accepts a Summary object; throws DataError when a field is missing.
Summary summary_from_json(const nlohmann::json& j);

// { "candidate", "direction", "side", "effective" }
nlohmann::json to_json(const Verdict& v);

}  // namespace lyndon
