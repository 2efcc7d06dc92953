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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hopsort/datasets.hpp"
#include "hopsort/merge.hpp"

namespace hopsort {

// Raised for configurations the runners refuse. The CLI maps it to exit code 2.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class TableFormat { kTsv, kCsv };
enum class ReportMode { kTotals, kPerElement };

struct ExperimentConfig {
  DatasetKind dataset = DatasetKind::kShuffled;
  unsigned exp_min = 7;
  unsigned exp_max = 16;
  std::uint64_t k = 1024;
  std::uint64_t trials = 100;
  std::uint64_t base_seed = 1;
  std::vector<MergeEngine> engines = {MergeEngine::kBaseline, MergeEngine::kHop};
  TableFormat format = TableFormat::kTsv;
  ReportMode mode = ReportMode::kTotals;
  // Upper bound on n * trials for the largest n.
  std::uint64_t element_budget = std::uint64_t{1} << 32;
  // 0 picks std::thread::hardware_concurrency().
  unsigned threads = 1;
};

// Throws ConfigError.
void validate(const ExperimentConfig& config);

struct ReportRow {
  std::uint64_t n = 0;
  DatasetKind dataset = DatasetKind::kShuffled;
  std::uint64_t k = 0;
  MergeEngine engine = MergeEngine::kBaseline;
  double comparisons_mean = 0.0;
  std::uint64_t comparisons_min = 0;
  std::uint64_t comparisons_max = 0;
  double per_element_mean = 0.0;
  double predicted = 0.0;
  // Per-trial comparison counts in seed order; not part of the table file.
  std::vector<std::uint64_t> trial_comparisons;
};

struct ExperimentReport {
  std::vector<ReportRow> rows;

  const ReportRow* find(std::uint64_t n, MergeEngine engine) const noexcept;
};

// One row per (n, engine), ordered by n then by the configured engine order.
// Sawtooth runs a single trial since it has no randomness.
ExperimentReport run_experiment(const ExperimentConfig& config);

std::string_view table_header(TableFormat format);
void write_report(std::ostream& out, const ExperimentReport& report, TableFormat format);
// Pivot with one line per n and one column per engine, holding either totals
// or per-element means.
void write_pivot(std::ostream& out, const ExperimentReport& report, ReportMode mode,
                 TableFormat format);

// Plain decimal, shortest representation that round-trips.
std::string format_decimal(double value);

struct VerifyConfig {
  std::uint64_t trials = 10000;
  std::size_t max_n = 256;
  std::uint64_t max_key = 16;
  std::uint64_t base_seed = 1;
};

struct VerifySummary {
  std::uint64_t trials = 0;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::optional<std::uint64_t> first_failing_seed;
  std::string first_failure;
  // Instances where the hop engine used more comparisons than the baseline.
  std::uint64_t dominance_violations = 0;

  bool ok() const noexcept { return failed == 0; }
};

// Trial t draws n uniformly from 0..max_n and keys from 0..max_key-1 using
// seed base_seed + t, sorts with both engines and checks the outputs against
// a reference stable sort, stability, hop-walk validity and distinct count.
VerifySummary run_verify(const VerifyConfig& config);
void write_verify_summary(std::ostream& out, const VerifySummary& summary);

struct ModelRow {
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  double predicted = 0.0;
  double per_element = 0.0;
};

std::vector<ModelRow> run_model(std::uint64_t k, unsigned exp_min, unsigned exp_max);
void write_model(std::ostream& out, const std::vector<ModelRow>& rows, TableFormat format);

}  // namespace hopsort
