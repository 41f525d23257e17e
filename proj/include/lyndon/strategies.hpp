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
#include <string>
#include <string_view>

#include "json.hpp"

#include "lyndon/alphabet.hpp"
#include "lyndon/text.hpp"

namespace lyndon {

enum class Target { factor_count, longest_factor };
enum class Direction { minimize, maximize };

struct Objective {
  Target target = Target::factor_count;
  Direction direction = Direction::maximize;

  // "min-k", "max-k", "min-m", "max-m"
  static Objective parse(std::string_view s);
  std::string name() const;

  friend bool operator==(const Objective&, const Objective&) = default;
};

struct Evaluation {
  std::size_t k = 0;
  std::size_t m = 0;
  friend bool operator==(const Evaluation&, const Evaluation&) = default;
};

// True when `a` is strictly preferable to `b`. The targeted quantity decides
// first; the other quantity breaks ties, in the same direction.
bool better(const Evaluation& a, const Evaluation& b, const Objective& objective);

struct SearchResult {
  AlphabetOrdering ordering;
  Evaluation value;
  std::size_t evaluations = 0;
  bool optimal = false;
};

inline constexpr std::size_t kDefaultExhaustiveLimit = 8;

Evaluation evaluate(TextView text, const AlphabetOrdering& ordering);

/// Tries all sigma! orderings and keeps the best one. Equal candidates
/// resolve to the lexicographically smallest permutation, so the result does
/// not depend on `threads`. Throws DataError when sigma > `limit_sigma`.
SearchResult exhaustive_search(TextView text, const Objective& objective,
                               std::size_t limit_sigma = kDefaultExhaustiveLimit,
                               unsigned threads = 1);

/// Builds the ordering one rank at a time, lowest rank first.
///
/// At step i every unassigned symbol is tried at rank i, the rest of the
/// unassigned symbols following in native order, and the complete candidate
/// is evaluated. The best candidate (ties: smallest symbol) fixes rank i.
/// Costs sigma*(sigma+1)/2 evaluations. The candidate keeping the remaining
/// symbols in native order at step i is the previous step's winner, so the
/// value never gets worse than the identity ordering's.
SearchResult greedy_ordering(TextView text, const Objective& objective);

// Default extra evaluations granted to greedy_backtracking_ordering.
inline std::size_t default_backtracking_budget(std::size_t sigma) { return 10 * sigma; }

/// Greedy, then revisits its choices with up to `budget` extra evaluations.
///
/// Each pass works from the deepest rank towards rank 0: keep the greedy
/// prefix above that rank, substitute the next-best alternative recorded
/// there, and complete greedily. The first pass uses second-best
/// alternatives, the next third-best, and so on, until the budget runs out or
/// no alternatives remain. Every evaluated ordering competes for the result,
/// so it is never worse than greedy_ordering. budget == 0 is plain greedy.
SearchResult greedy_backtracking_ordering(TextView text, const Objective& objective,
                                          std::size_t budget);

// { "strategy", "objective", "perm", "k", "m", "evaluations", "optimal" }
nlohmann::json to_json(const SearchResult& r, std::string_view strategy, const Objective& objective);

}  // namespace lyndon
