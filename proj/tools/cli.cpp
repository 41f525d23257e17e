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

#include "cli.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "lyndon/alphabet.hpp"
#include "lyndon/baseline.hpp"
#include "lyndon/corpus.hpp"
#include "lyndon/error.hpp"
#include "lyndon/factorization.hpp"
#include "lyndon/strategies.hpp"

namespace lyndon::cli {
namespace {

using nlohmann::json;

struct RunConfig {
  std::string input_path;
  std::string ordering_spec = "identity";
  std::string objective = "max-k";
  std::string method;  // order/search strategy
  std::size_t n_samples = kDefaultSamples;
  std::uint64_t base_seed = 0;
  std::optional<std::size_t> budget;
  std::string output_format = "text";
  std::optional<std::size_t> max_bytes;
  bool show_boundaries = false;
  unsigned threads = 1;
  std::size_t exhaustive_limit = kDefaultExhaustiveLimit;
  std::string perm_out;
  std::string csv_out;
  std::string summary_out;
  std::string summary_in;
  std::optional<double> candidate;
};

std::string fixed2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string perm_chars(const AlphabetOrdering& o) {
  std::string s;
  for (Byte b : o.perm()) {
    if (!s.empty()) s += ',';
    if (b >= 0x21 && b < 0x7f) {
      s += static_cast<char>(b);
    } else {
      char buf[8];
      std::snprintf(buf, sizeof buf, "\\x%02x", b);
      s += buf;
    }
  }
  return s;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f || !(f << content) || !f.flush()) throw IoError("cannot write " + path);
}

// identity | mfs | lfs | random:<seed> | file:<path>
AlphabetOrdering resolve_ordering(const std::string& spec, TextView text, const Alphabet& alphabet) {
  if (spec == "identity") return identity_ordering(alphabet);
  if (spec == "mfs") return mfs_ordering(parikh_vector(text, alphabet));
  if (spec == "lfs") return lfs_ordering(parikh_vector(text, alphabet));
  if (spec.rfind("random:", 0) == 0) {
    const std::string seed = spec.substr(7);
    std::size_t used = 0;
    std::uint64_t value = 0;
    try {
      value = std::stoull(seed, &used, 10);
    } catch (const std::exception&) {
      used = 0;
    }
    if (seed.empty() || used != seed.size()) throw std::invalid_argument("bad seed in --order " + spec);
    return random_ordering(alphabet, value);
  }
  if (spec.rfind("file:", 0) == 0) return read_permutation(spec.substr(5), alphabet);
  throw std::invalid_argument("unknown --order '" + spec + "' (identity|mfs|lfs|random:<seed>|file:<path>)");
}

Text load(const RunConfig& c) { return load_text(c.input_path, c.max_bytes); }

int cmd_info(const RunConfig& c, std::ostream& out) {
  const Text text = load(c);
  const DatasetInfo info = dataset_info(c.input_path, text);
  if (c.output_format == "json") {
    out << to_json(info).dump() << '\n';
  } else {
    out << "path    " << info.path << '\n'
        << "n       " << info.n << '\n'
        << "sigma   " << info.sigma << '\n'
        << "size_mb " << info.size_mb << '\n';
  }
  return kOk;
}

int cmd_factorize(const RunConfig& c, std::ostream& out) {
  const Text text = load(c);
  const Alphabet alphabet = detect_alphabet(text);
  const AlphabetOrdering ordering = resolve_ordering(c.ordering_spec, text, alphabet);
  const Factorization f = duval_factorize(text, ordering);
  const FactorStats s = factor_stats(f);
  if (c.output_format == "json") {
    out << to_json(f, c.show_boundaries).dump() << '\n';
    return kOk;
  }
  out << "order  " << c.ordering_spec << " (" << perm_chars(ordering) << ")\n"
      << "n      " << f.text_length() << '\n'
      << "k      " << s.k << '\n'
      << "m      " << s.m << '\n'
      << "m_pct  " << fixed2(s.m_pct) << "%\n";
  if (c.show_boundaries) {
    out << "boundaries";
    for (std::size_t b : f.boundaries()) out << ' ' << b;
    out << '\n';
  }
  return kOk;
}

int cmd_order(const RunConfig& c, std::ostream& out) {
  const Text text = load(c);
  const Alphabet alphabet = detect_alphabet(text);
  const Objective objective = Objective::parse(c.objective);
  const std::string& method = c.method;

  std::optional<SearchResult> result;
  if (method == "mfs" || method == "lfs") {
    const auto p = parikh_vector(text, alphabet);
    auto ordering = method == "mfs" ? mfs_ordering(p) : lfs_ordering(p);
    const Evaluation v = evaluate(text, ordering);
    result.emplace(SearchResult{std::move(ordering), v, 1, false});
  } else if (method == "greedy") {
    result.emplace(greedy_ordering(text, objective));
  } else if (method == "greedy-bt") {
    result.emplace(greedy_backtracking_ordering(
        text, objective, c.budget.value_or(default_backtracking_budget(alphabet.sigma()))));
  } else if (method == "exhaustive") {
    result.emplace(exhaustive_search(text, objective, c.exhaustive_limit, c.threads));
  } else {
    throw std::invalid_argument("unknown method '" + method + "' (mfs|lfs|greedy|greedy-bt|exhaustive)");
  }

  if (!c.perm_out.empty()) write_permutation(result->ordering, c.perm_out);
  if (c.output_format == "json") {
    out << to_json(*result, method, objective).dump() << '\n';
    return kOk;
  }
  const std::size_t n = text.size();
  out << "strategy     " << method << '\n'
      << "objective    " << objective.name() << '\n'
      << "perm         " << format_permutation(result->ordering)
      << "symbols      " << perm_chars(result->ordering) << '\n'
      << "k            " << result->value.k << '\n'
      << "m            " << result->value.m << '\n'
      << "m_pct        " << fixed2(percent_2dp(result->value.m, n)) << "%\n"
      << "evaluations  " << result->evaluations << '\n'
      << "optimal      " << (result->optimal ? "true" : "false") << '\n';
  return kOk;
}

json summaries_json(const BaselineDistribution& d) {
  const auto k = d.k_values();
  const auto pct = d.m_pct_values();
  return json::array({to_json(summarize(k), "k"), to_json(summarize(pct), "m_pct")});
}

int cmd_baseline(const RunConfig& c, std::ostream& out) {
  if (c.n_samples == 0) throw std::invalid_argument("--samples must be at least 1");
  const Text text = load(c);
  const BaselineDistribution d = sample_baseline(text, c.n_samples, c.base_seed, c.threads);
  const json summaries = summaries_json(d);

  if (!c.csv_out.empty()) {
    std::ostringstream csv;
    write_baseline_csv(csv, d);
    write_file(c.csv_out, csv.str());
  }
  if (!c.summary_out.empty()) write_file(c.summary_out, summaries.dump(2) + "\n");

  if (c.output_format == "csv") {
    write_baseline_csv(out, d);
  } else if (c.output_format == "json") {
    out << json{{"n_samples", d.n_samples}, {"base_seed", d.base_seed}, {"summaries", summaries}}.dump()
        << '\n';
  } else {
    out << "samples " << d.n_samples << "  base_seed " << d.base_seed << '\n'
        << "metric        min        q1    median        q3       max\n";
    for (const auto& s : summaries) {
      char line[128];
      std::snprintf(line, sizeof line, "%-6s %9.2f %9.2f %9.2f %9.2f %9.2f\n",
                    s["metric"].get<std::string>().c_str(), s["min"].get<double>(),
                    s["q1"].get<double>(), s["median"].get<double>(), s["q3"].get<double>(),
                    s["max"].get<double>());
      out << line;
    }
  }
  return kOk;
}

Summary load_summary(const std::string& path, const std::string& metric) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw DataError("malformed summary file " + path + ": " + e.what());
  }
  if (j.is_array()) {
    for (const auto& s : j)
      if (s.is_object() && s.value("metric", "") == metric) return summary_from_json(s);
    throw DataError("summary file " + path + " has no '" + metric + "' entry");
  }
  if (j.contains("metric") && j["metric"] != metric)
    throw DataError("summary file " + path + " is for metric " + j["metric"].dump() + ", need " + metric);
  return summary_from_json(j);
}

int cmd_verdict(const RunConfig& c, std::ostream& out) {
  const Objective objective = Objective::parse(c.objective);
  const std::string metric = objective.target == Target::factor_count ? "k" : "m_pct";

  std::optional<Text> text;
  auto need_text = [&]() -> const Text& {
    if (!text) {
      if (c.input_path.empty()) throw std::invalid_argument("an input file is required unless --candidate and --summary are both given");
      text = load(c);
    }
    return *text;
  };

  double candidate = 0;
  if (c.candidate) {
    candidate = *c.candidate;
  } else {
    const Text& t = need_text();
    const auto f = duval_factorize(t, resolve_ordering(c.ordering_spec, t, detect_alphabet(t)));
    candidate = metric == "k" ? static_cast<double>(f.k()) : percent_2dp(f.m(), f.text_length());
  }

  Summary summary;
  if (!c.summary_in.empty()) {
    summary = load_summary(c.summary_in, metric);
  } else {
    if (c.n_samples == 0) throw std::invalid_argument("--samples must be at least 1");
    const auto d = sample_baseline(need_text(), c.n_samples, c.base_seed, c.threads);
    const auto values = metric == "k" ? d.k_values() : d.m_pct_values();
    summary = summarize(values);
  }

  const Verdict v = effectiveness_verdict(candidate, summary, objective.direction);
  if (c.output_format == "json") {
    out << to_json(v).dump() << '\n';
  } else {
    out << "metric     " << metric << '\n'
        << "candidate  " << fixed2(candidate) << '\n'
        << "direction  " << to_string(v.direction) << '\n'
        << "summary    min " << fixed2(summary.min) << "  q1 " << fixed2(summary.q1) << "  median "
        << fixed2(summary.median) << "  q3 " << fixed2(summary.q3) << "  max " << fixed2(summary.max)
        << '\n'
        << "side       " << to_string(v.side) << '\n'
        << "effective  " << (v.effective ? "yes" : "no") << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lyndon factorization under alphabet reorderings"};
  app.require_subcommand(1);
  RunConfig c;

  const auto formats = CLI::IsMember({"text", "json", "csv"});
  auto add_common = [&](CLI::App* sub, bool input_required = true) {
    auto* in = sub->add_option("input", c.input_path, "Input file (raw bytes)");
    if (input_required) in->required();
    sub->add_option("--max-bytes", c.max_bytes, "Only read this many leading bytes");
    sub->add_option("--format", c.output_format, "Output format")->check(formats);
  };

  auto* info = app.add_subcommand("info", "Report n, sigma and size of a dataset");
  add_common(info);

  auto* factorize = app.add_subcommand("factorize", "Lyndon-factorize under an ordering");
  add_common(factorize);
  factorize->add_option("--order", c.ordering_spec, "identity|mfs|lfs|random:<seed>|file:<path>");
  factorize->add_flag("--show-boundaries", c.show_boundaries, "List factor end offsets");

  auto add_search = [&](CLI::App* sub, std::string& method) {
    add_common(sub);
    sub->add_option("--method,--strategy", method, "mfs|lfs|greedy|greedy-bt|exhaustive")
        ->check(CLI::IsMember({"mfs", "lfs", "greedy", "greedy-bt", "exhaustive"}));
    sub->add_option("--objective", c.objective, "{min,max}-{k,m}");
    sub->add_option("--budget", c.budget, "Extra evaluations for greedy-bt (default 10*sigma)");
    sub->add_option("--exhaustive-limit", c.exhaustive_limit, "Largest sigma for exhaustive search");
    sub->add_option("--threads", c.threads, "Worker threads for exhaustive search")->check(CLI::PositiveNumber);
    sub->add_option("--perm-out", c.perm_out, "Write the chosen permutation here");
  };
  auto* order = app.add_subcommand("order", "Pick an ordering with a strategy");
  auto* search = app.add_subcommand("search", "Search for an ordering (default: exhaustive)");

  auto* baseline = app.add_subcommand("baseline", "Random-ordering baseline distribution");
  add_common(baseline);
  baseline->add_option("--samples", c.n_samples, "Number of random orderings");
  baseline->add_option("--seed", c.base_seed, "Base seed; sample i uses seed+i");
  baseline->add_option("--threads", c.threads, "Worker threads")->check(CLI::PositiveNumber);
  baseline->add_option("--csv-out", c.csv_out, "Write per-sample CSV here");
  baseline->add_option("--summary-out", c.summary_out, "Write summary JSON here");

  auto* verdict = app.add_subcommand("verdict", "Judge a candidate against a random baseline");
  add_common(verdict, false);
  verdict->add_option("--objective", c.objective, "{min,max}-{k,m}");
  verdict->add_option("--order", c.ordering_spec, "Ordering producing the candidate value");
  verdict->add_option("--candidate", c.candidate, "Candidate value (k, or m as percent)");
  verdict->add_option("--summary", c.summary_in, "Summary JSON from 'baseline --summary-out'");
  verdict->add_option("--samples", c.n_samples, "Samples when computing the baseline inline");
  verdict->add_option("--seed", c.base_seed, "Base seed when computing the baseline inline");
  verdict->add_option("--threads", c.threads, "Worker threads")->check(CLI::PositiveNumber);

  std::string order_method = "mfs";
  std::string search_method = "exhaustive";
  add_search(order, order_method);
  add_search(search, search_method);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*info) return cmd_info(c, out);
    if (*factorize) return cmd_factorize(c, out);
    if (*order || *search) {
      c.method = *order ? order_method : search_method;
      return cmd_order(c, out);
    }
    if (*baseline) return cmd_baseline(c, out);
    if (*verdict) return cmd_verdict(c, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  }
  return kUsageError;
}

}  // namespace lyndon::cli
