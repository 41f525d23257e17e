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

#include "lyndon/baseline.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "lyndon/alphabet.hpp"
#include "lyndon/error.hpp"
#include "lyndon/factorization.hpp"

namespace lyndon {

std::vector<double> BaselineDistribution::k_values() const {
  std::vector<double> v;
  v.reserve(samples.size());
  for (const auto& s : samples) v.push_back(static_cast<double>(s.k));
  return v;
}

std::vector<double> BaselineDistribution::m_pct_values() const {
  std::vector<double> v;
  v.reserve(samples.size());
  for (const auto& s : samples) v.push_back(s.m_pct);
  return v;
}

BaselineDistribution sample_baseline(TextView text, std::size_t n_samples, std::uint64_t base_seed,
                                     unsigned threads) {
  if (n_samples == 0) throw std::invalid_argument("n_samples must be at least 1");
  const Alphabet alphabet = detect_alphabet(text);
  BaselineDistribution d{n_samples, base_seed, text.size(), std::vector<BaselineSample>(n_samples)};

  auto run = [&](std::size_t i) {
    const std::uint64_t seed = base_seed + i;
    const auto f = duval_factorize(text, random_ordering(alphabet, seed));
    d.samples[i] = {i, seed, f.k(), f.m(), percent_2dp(f.m(), f.text_length())};
  };

  threads = std::max(1u, threads);
  if (threads == 1) {
    for (std::size_t i = 0; i < n_samples; ++i) run(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < n_samples;) run(i);
      });
  }
  return d;
}

Summary summarize(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("cannot summarize an empty sample");
  std::vector<double> v(values.begin(), values.end());
  std::sort(v.begin(), v.end());
  const auto at = [&](double p) {
    const double pos = static_cast<double>(v.size() - 1) * p;
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, v.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return v[lo] + (v[hi] - v[lo]) * frac;
  };
  return {v.front(), at(0.25), at(0.5), at(0.75), v.back()};
}

Verdict effectiveness_verdict(double candidate, const Summary& summary, Direction direction) {
  Verdict v;
  v.candidate_value = candidate;
  v.direction = direction;
  v.summary = summary;
  if (direction == Direction::maximize && candidate > summary.q3) v.side = Side::above_q3;
  else if (direction == Direction::minimize && candidate < summary.q1) v.side = Side::below_q1;
  else v.side = Side::inside;
  v.effective = v.side != Side::inside;
  return v;
}

std::string_view to_string(Side side) {
  switch (side) {
    case Side::above_q3: return "above_q3";
    case Side::below_q1: return "below_q1";
    case Side::inside: return "inside";
  }
  return "inside";
}

std::string_view to_string(Direction direction) {
  return direction == Direction::maximize ? "maximize" : "minimize";
}

void write_baseline_csv(std::ostream& out, const BaselineDistribution& d) {
  out << "sample,seed,k,m,m_pct\n";
  char pct[32];
  for (const auto& s : d.samples) {
    std::snprintf(pct, sizeof pct, "%.2f", s.m_pct);
    out << s.index << ',' << s.seed << ',' << s.k << ',' << s.m << ',' << pct << '\n';
  }
}

nlohmann::json to_json(const Summary& s, std::string_view metric) {
  return {{"metric", metric}, {"min", s.min},       {"q1", s.q1},
          {"median", s.median}, {"q3", s.q3}, {"max", s.max}};
}

Summary summary_from_json(const nlohmann::json& j) {
  try {
    return {j.at("min").get<double>(), j.at("q1").get<double>(), j.at("median").get<double>(),
            j.at("q3").get<double>(), j.at("max").get<double>()};
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed summary: ") + e.what());
  }
}

nlohmann::json to_json(const Verdict& v) {
  return {{"candidate", v.candidate_value},
          {"direction", to_string(v.direction)},
          {"side", to_string(v.side)},
          {"effective", v.effective}};
}

}  // namespace lyndon
