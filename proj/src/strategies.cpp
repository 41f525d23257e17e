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

#include "lyndon/strategies.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <limits>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "duval_scan.hpp"
#include "lyndon/error.hpp"
#include "lyndon/factorization.hpp"

namespace lyndon {

Objective Objective::parse(std::string_view s) {
  Objective o;
  if (s.size() != 5 || s[3] != '-') throw std::invalid_argument("objective must be one of min-k, max-k, min-m, max-m");
  const auto dir = s.substr(0, 3);
  const char target = s[4];
  if (dir == "min") o.direction = Direction::minimize;
  else if (dir == "max") o.direction = Direction::maximize;
  else throw std::invalid_argument("objective must be one of min-k, max-k, min-m, max-m");
  if (target == 'k') o.target = Target::factor_count;
  else if (target == 'm') o.target = Target::longest_factor;
  else throw std::invalid_argument("objective must be one of min-k, max-k, min-m, max-m");
  return o;
}

std::string Objective::name() const {
  std::string s = direction == Direction::minimize ? "min-" : "max-";
  s += target == Target::factor_count ? 'k' : 'm';
  return s;
}

bool better(const Evaluation& a, const Evaluation& b, const Objective& objective) {
  const auto key = [&](const Evaluation& e) {
    return objective.target == Target::factor_count ? std::pair{e.k, e.m} : std::pair{e.m, e.k};
  };
  return objective.direction == Direction::maximize ? key(a) > key(b) : key(a) < key(b);
}

namespace {

using RankTable = std::array<std::int16_t, 256>;

// k and m of the factorization under `ranks`, without materializing boundaries.
Evaluation scan(TextView text, const RankTable& ranks) {
  Evaluation e;
  std::size_t prev = 0;
  detail::duval_scan(text, [&ranks](Byte b) { return ranks[b]; }, [&](std::size_t end) {
    ++e.k;
    e.m = std::max(e.m, end - prev);
    prev = end;
  });
  return e;
}

Evaluation scan(TextView text, std::span<const Byte> perm) {
  RankTable ranks;
  ranks.fill(-1);
  for (std::size_t i = 0; i < perm.size(); ++i) ranks[perm[i]] = static_cast<std::int16_t>(i);
  return scan(text, ranks);
}

// Greedy construction from a fixed prefix, shared by plain greedy and the
// backtracking passes. Every evaluated candidate is offered to `best`.
class GreedyRunner {
 public:
  GreedyRunner(TextView text, const Objective& objective, std::size_t max_evaluations)
      : text_(text), objective_(objective), max_evaluations_(max_evaluations) {}

  struct Candidate {
    std::vector<Byte> perm;
    Evaluation value;
  };

  // Completes `prefix` (remaining symbols in `rest`, ascending). When
  // `rankings` is non-null, stores the candidate symbols of each level in
  // preference order. Returns false if the evaluation limit cut the run short.
  bool complete(std::vector<Byte> prefix, std::vector<Byte> rest,
                std::vector<std::vector<Byte>>* rankings) {
    while (!rest.empty()) {
      std::vector<std::pair<Byte, Evaluation>> tried;
      tried.reserve(rest.size());
      for (std::size_t c = 0; c < rest.size(); ++c) {
        if (evaluations_ >= max_evaluations_) return false;
        std::vector<Byte> perm = prefix;
        perm.push_back(rest[c]);
        for (std::size_t r = 0; r < rest.size(); ++r)
          if (r != c) perm.push_back(rest[r]);
        const Evaluation v = scan(text_, perm);
        ++evaluations_;
        offer(perm, v);
        tried.emplace_back(rest[c], v);
      }
      // Stable: equal values keep ascending symbol order.
      std::stable_sort(tried.begin(), tried.end(), [&](const auto& a, const auto& b) {
        return better(a.second, b.second, objective_);
      });
      if (rankings) {
        auto& level = rankings->emplace_back();
        for (const auto& t : tried) level.push_back(t.first);
      }
      const Byte chosen = tried.front().first;
      prefix.push_back(chosen);
      rest.erase(std::find(rest.begin(), rest.end(), chosen));
      last_ = Candidate{prefix, tried.front().second};
    }
    return true;
  }

  void offer(const std::vector<Byte>& perm, const Evaluation& v) {
    if (!best_ || better(v, best_->value, objective_)) best_ = Candidate{perm, v};
  }

  void reset_best(Candidate c) { best_ = std::move(c); }
  const Candidate& best() const { return *best_; }
  const Candidate& last_completed() const { return *last_; }
  std::size_t evaluations() const { return evaluations_; }
  void set_limit(std::size_t limit) { max_evaluations_ = limit; }

 private:
  TextView text_;
  Objective objective_;
  std::size_t max_evaluations_;
  std::size_t evaluations_ = 0;
  std::optional<Candidate> best_;
  std::optional<Candidate> last_;
};

std::vector<Byte> symbols_of(const Alphabet& a) { return {a.symbols().begin(), a.symbols().end()}; }

}  // namespace

Evaluation evaluate(TextView text, const AlphabetOrdering& ordering) {
  const auto f = duval_factorize(text, ordering);
  return {f.k(), f.m()};
}

SearchResult exhaustive_search(TextView text, const Objective& objective, std::size_t limit_sigma,
                               unsigned threads) {
  const Alphabet alphabet = detect_alphabet(text);
  const std::size_t sigma = alphabet.sigma();
  if (sigma > limit_sigma)
    throw DataError("alphabet too large for exhaustive search: sigma=" + std::to_string(sigma) +
                    " exceeds the limit of " + std::to_string(limit_sigma) +
                    " (raise --exhaustive-limit or use a greedy strategy)");

  // One chunk per leading symbol; each chunk walks its permutations in
  // lexicographic order, so its first strict improvement is the smallest.
  struct Chunk {
    std::vector<Byte> perm;
    Evaluation value;
    std::size_t evaluations = 0;
  };
  std::vector<Chunk> chunks(sigma);
  const std::vector<Byte> symbols = symbols_of(alphabet);

  auto run_chunk = [&](std::size_t lead) {
    std::vector<Byte> perm{symbols[lead]};
    for (std::size_t i = 0; i < sigma; ++i)
      if (i != lead) perm.push_back(symbols[i]);
    Chunk& out = chunks[lead];
    bool first = true;
    do {
      const Evaluation v = scan(text, perm);
      ++out.evaluations;
      if (first || better(v, out.value, objective)) {
        out.perm = perm;
        out.value = v;
        first = false;
      }
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
  };

  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(sigma)));
  if (threads == 1) {
    for (std::size_t lead = 0; lead < sigma; ++lead) run_chunk(lead);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::size_t lead; (lead = next.fetch_add(1)) < sigma;) run_chunk(lead);
      });
  }

  std::size_t total = 0;
  const Chunk* winner = nullptr;
  for (const Chunk& c : chunks) {
    total += c.evaluations;
    if (!winner || better(c.value, winner->value, objective)) winner = &c;
  }
  return {ordering_from_sequence(alphabet, winner->perm), winner->value, total, true};
}

SearchResult greedy_ordering(TextView text, const Objective& objective) {
  return greedy_backtracking_ordering(text, objective, 0);
}

SearchResult greedy_backtracking_ordering(TextView text, const Objective& objective,
                                          std::size_t budget) {
  const Alphabet alphabet = detect_alphabet(text);
  GreedyRunner runner(text, objective, std::numeric_limits<std::size_t>::max());

  std::vector<std::vector<Byte>> rankings;
  runner.complete({}, symbols_of(alphabet), &rankings);
  const auto greedy = runner.last_completed();
  runner.reset_best(greedy);

  const std::size_t greedy_evaluations = runner.evaluations();
  runner.set_limit(greedy_evaluations + budget);

  bool exhausted = budget == 0;
  for (std::size_t alt = 1; !exhausted; ++alt) {
    bool any = false;
    for (std::size_t level = rankings.size(); level-- > 0 && !exhausted;) {
      if (rankings[level].size() <= alt) continue;
      any = true;
      std::vector<Byte> prefix(greedy.perm.begin(), greedy.perm.begin() + static_cast<std::ptrdiff_t>(level));
      prefix.push_back(rankings[level][alt]);
      std::vector<Byte> rest;
      for (Byte s : alphabet.symbols())
        if (std::find(prefix.begin(), prefix.end(), s) == prefix.end()) rest.push_back(s);
      exhausted = !runner.complete(std::move(prefix), std::move(rest), nullptr);
    }
    if (!any) break;
  }

  const auto& best = runner.best();
  return {ordering_from_sequence(alphabet, best.perm), best.value, runner.evaluations(), false};
}

nlohmann::json to_json(const SearchResult& r, std::string_view strategy, const Objective& objective) {
  return {{"strategy", strategy},
          {"objective", objective.name()},
          {"perm", std::vector<int>(r.ordering.perm().begin(), r.ordering.perm().end())},
          {"k", r.value.k},
          {"m", r.value.m},
          {"evaluations", r.evaluations},
          {"optimal", r.optimal}};
}

}  // namespace lyndon
