// Copyright 2026 The hopsort Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hopsort/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <numeric>
#include <thread>

#include "hopsort/cost_model.hpp"
#include "hopsort/list.hpp"

namespace hopsort {

namespace {

constexpr unsigned kMaxExponent = 40;

char separator(TableFormat format) { return format == TableFormat::kCsv ? ',' : '\t'; }

// Comparison counts of every engine on one generated input.
std::vector<std::uint64_t> run_cell(const DatasetSpec& spec,
                                    const std::vector<MergeEngine>& engines) {
  const std::vector<Key> keys = generate(spec);
  std::vector<std::uint64_t> counts;
  counts.reserve(engines.size());
  for (MergeEngine engine : engines) {
    SortList list = SortList::from_keys(keys);
    ComparisonCounter counter;
    counts.push_back(mergesort(list, engine, counter).comparisons);
  }
  return counts;
}

template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> cursor{0};
  std::vector<std::jthread> pool;
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = cursor++; i < count; i = cursor++) fn(i);
    });
  }
}

}  // namespace

void validate(const ExperimentConfig& config) {
  if (config.exp_min > config.exp_max) throw ConfigError("exp-min must not exceed exp-max");
  if (config.exp_max > kMaxExponent) throw ConfigError("exp-max must be at most 40");
  if (config.trials < 1) throw ConfigError("trials must be at least 1");
  if (config.k < 1) throw ConfigError("k must be at least 1");
  if (config.engines.empty()) throw ConfigError("at least one engine is required");
  const std::uint64_t n_max = std::uint64_t{1} << config.exp_max;
  const std::uint64_t trials = config.dataset == DatasetKind::kSawtooth ? 1 : config.trials;
  if (n_max > config.element_budget / trials) {
    throw ConfigError("n * trials = " + std::to_string(n_max) + " * " + std::to_string(trials) +
                      " exceeds the element budget of " + std::to_string(config.element_budget));
  }
}

const ReportRow* ExperimentReport::find(std::uint64_t n, MergeEngine engine) const noexcept {
  for (const ReportRow& row : rows) {
    if (row.n == n && row.engine == engine) return &row;
  }
  return nullptr;
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
  validate(config);
  const unsigned threads =
      config.threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : config.threads;
  const std::uint64_t trials = config.dataset == DatasetKind::kSawtooth ? 1 : config.trials;

  ExperimentReport report;
  for (unsigned e = config.exp_min; e <= config.exp_max; ++e) {
    const std::uint64_t n = std::uint64_t{1} << e;
    std::vector<std::vector<std::uint64_t>> cells(trials);
    parallel_for(trials, threads, [&](std::size_t t) {
      DatasetSpec spec{config.dataset, n, config.k, config.base_seed + t};
      cells[t] = run_cell(spec, config.engines);
    });

    const std::uint64_t distinct =
        config.dataset == DatasetKind::kShuffled ? n : std::min(n, config.k);
    for (std::size_t ei = 0; ei < config.engines.size(); ++ei) {
      ReportRow row;
      row.n = n;
      row.dataset = config.dataset;
      row.k = config.k;
      row.engine = config.engines[ei];
      row.trial_comparisons.reserve(trials);
      for (const auto& cell : cells) row.trial_comparisons.push_back(cell[ei]);
      const auto& counts = row.trial_comparisons;
      // Integer sum keeps the mean independent of reduction order.
      const std::uint64_t sum = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
      row.comparisons_mean = static_cast<double>(sum) / static_cast<double>(trials);
      row.comparisons_min = *std::min_element(counts.begin(), counts.end());
      row.comparisons_max = *std::max_element(counts.begin(), counts.end());
      row.per_element_mean = per_element(row.comparisons_mean, n);
      row.predicted = predicted_cost_clamped(n, distinct);
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

std::string format_decimal(double value) {
  char buf[128];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, end);
}

std::string_view table_header(TableFormat format) {
  if (format == TableFormat::kCsv) {
    return "n,dataset,k,engine,comparisons_mean,comparisons_min,comparisons_max,"
           "per_element_mean,predicted";
  }
  return "n\tdataset\tk\tengine\tcomparisons_mean\tcomparisons_min\tcomparisons_max\t"
         "per_element_mean\tpredicted";
}

void write_report(std::ostream& out, const ExperimentReport& report, TableFormat format) {
  const char sep = separator(format);
  out << table_header(format) << '\n';
  for (const ReportRow& row : report.rows) {
    out << row.n << sep << to_string(row.dataset) << sep << row.k << sep << to_string(row.engine)
        << sep << format_decimal(row.comparisons_mean) << sep << row.comparisons_min << sep
        << row.comparisons_max << sep << format_per_element(row.per_element_mean) << sep
        << format_decimal(row.predicted) << '\n';
  }
}

void write_pivot(std::ostream& out, const ExperimentReport& report, ReportMode mode,
                 TableFormat format) {
  const char sep = separator(format);
  std::vector<MergeEngine> engines;
  std::vector<std::uint64_t> sizes;
  for (const ReportRow& row : report.rows) {
    if (std::find(engines.begin(), engines.end(), row.engine) == engines.end()) {
      engines.push_back(row.engine);
    }
    if (std::find(sizes.begin(), sizes.end(), row.n) == sizes.end()) sizes.push_back(row.n);
  }
  out << 'n';
  for (MergeEngine engine : engines) out << sep << to_string(engine);
  out << '\n';
  for (std::uint64_t n : sizes) {
    out << n;
    for (MergeEngine engine : engines) {
      out << sep;
      if (const ReportRow* row = report.find(n, engine)) {
        out << (mode == ReportMode::kTotals ? format_decimal(row->comparisons_mean)
                                            : format_per_element(row->per_element_mean));
      }
    }
    out << '\n';
  }
}

namespace {

std::string check_trial(std::span<const Key> keys) {
  std::vector<Key> reference(keys.begin(), keys.end());
  std::stable_sort(reference.begin(), reference.end());
  std::vector<Key> unique = reference;
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());

  for (MergeEngine engine : {MergeEngine::kBaseline, MergeEngine::kHop}) {
    const std::string tag = std::string(to_string(engine)) + ": ";
    SortList list = SortList::from_keys(keys);
    ComparisonCounter counter;
    mergesort(list, engine, counter);
    if (to_keys(list) != reference) return tag + "output differs from reference stable sort";
    const Verdict verdict = check_sorted_stable(list, keys);
    if (!verdict.ok()) {
      return tag + "check failed (" + to_string(verdict.kind) + ") at position " +
             std::to_string(verdict.position);
    }
    const HopWalk walk = hop_walk(list);
    if (!walk.valid()) {
      return tag + "hop walk invalid at walk index " + std::to_string(walk.violation->walk_index);
    }
    if (distinct_key_count(list) != unique.size()) return tag + "distinct key count mismatch";
  }
  return {};
}

}  // namespace

VerifySummary run_verify(const VerifyConfig& config) {
  if (config.trials < 1) throw ConfigError("trials must be at least 1");
  if (config.max_key < 1) throw ConfigError("max-key must be at least 1");
  VerifySummary summary;
  for (std::uint64_t t = 0; t < config.trials; ++t) {
    const std::uint64_t seed = config.base_seed + t;
    Rng64 rng(seed);
    const auto n = static_cast<std::size_t>(rng.below(config.max_n + 1));
    std::vector<Key> keys(n);
    for (Key& key : keys) key = Key{static_cast<std::int64_t>(rng.below(config.max_key))};

    ++summary.trials;
    const std::string failure = check_trial(keys);
    if (failure.empty()) {
      ++summary.passed;
    } else {
      ++summary.failed;
      if (!summary.first_failing_seed) {
        summary.first_failing_seed = seed;
        summary.first_failure = failure;
      }
    }
    const SortResult base = sort_with_stats(keys, MergeEngine::kBaseline);
    const SortResult hop = sort_with_stats(keys, MergeEngine::kHop);
    if (hop.stats.comparisons > base.stats.comparisons) ++summary.dominance_violations;
  }
  return summary;
}

void write_verify_summary(std::ostream& out, const VerifySummary& summary) {
  out << "trials\t" << summary.trials << '\n'
      << "passed\t" << summary.passed << '\n'
      << "failed\t" << summary.failed << '\n'
      << "dominance_violations\t" << summary.dominance_violations << '\n';
  if (summary.first_failing_seed) {
    out << "first_failing_seed\t" << *summary.first_failing_seed << '\n'
        << "first_failure\t" << summary.first_failure << '\n';
  }
}

std::vector<ModelRow> run_model(std::uint64_t k, unsigned exp_min, unsigned exp_max) {
  if (k < 1) throw ConfigError("k must be at least 1");
  if (exp_min > exp_max) throw ConfigError("exp-min must not exceed exp-max");
  if (exp_max > 62) throw ConfigError("exp-max must be at most 62");
  std::vector<ModelRow> rows;
  for (unsigned e = exp_min; e <= exp_max; ++e) {
    const std::uint64_t n = std::uint64_t{1} << e;
    const double predicted = predicted_cost_clamped(n, k);
    rows.push_back({n, k, predicted, per_element(predicted, n)});
  }
  return rows;
}

void write_model(std::ostream& out, const std::vector<ModelRow>& rows, TableFormat format) {
  const char sep = separator(format);
  out << 'n' << sep << 'k' << sep << "predicted" << sep << "predicted_per_element" << '\n';
  for (const ModelRow& row : rows) {
    out << row.n << sep << row.k << sep << format_decimal(row.predicted) << sep
        << format_per_element(row.per_element) << '\n';
  }
}

}  // namespace hopsort
