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

// hopsort: comparison-count harness for the linked-list mergesort engines.
//
//   hopsort bench  --dataset sawtooth --k 1024 --exp-min 7 --exp-max 13 --engine both
//   hopsort verify --trials 10000 --max-n 256 --max-key 16 --seed 1
//   hopsort model  --k 1024 --exp-min 7 --exp-max 22

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "hopsort/experiment.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInvalidConfig = 2;

}  // namespace

int main(int argc, char** argv) {
  using namespace hopsort;

  CLI::App app{"Linked-list bottom-up mergesort comparison-count harness"};
  app.require_subcommand(1);

  ExperimentConfig bench;
  std::string engine = "both";
  std::string out_path;
  auto* bench_cmd = app.add_subcommand("bench", "Run a comparison-count experiment");
  std::string dataset = "shuffled";
  std::string mode = "totals";
  std::string format = "tsv";
  bench_cmd->add_option("--dataset", dataset, "Dataset kind")
      ->check(CLI::IsMember({"shuffled", "sawtooth", "kdistinct"}))
      ->capture_default_str();
  bench_cmd->add_option("--k", bench.k, "Distinct-key bound")->capture_default_str();
  bench_cmd->add_option("--exp-min", bench.exp_min, "Smallest n = 2^exp-min")
      ->capture_default_str();
  bench_cmd->add_option("--exp-max", bench.exp_max, "Largest n = 2^exp-max")
      ->capture_default_str();
  bench_cmd->add_option("--trials", bench.trials, "Seeds per n")->capture_default_str();
  bench_cmd->add_option("--seed", bench.base_seed, "First seed")->capture_default_str();
  bench_cmd->add_option("--engine", engine, "baseline, hop or both")
      ->check(CLI::IsMember({"baseline", "hop", "both"}))
      ->capture_default_str();
  bench_cmd->add_option("--mode", mode, "Pivot printed to stdout when --out is given")
      ->check(CLI::IsMember({"totals", "per-element"}))
      ->capture_default_str();
  bench_cmd->add_option("--format", format, "Table format")
      ->check(CLI::IsMember({"tsv", "csv"}))
      ->capture_default_str();
  bench_cmd->add_option("--out", out_path, "Table file (stdout when omitted)");
  bench_cmd->add_option("--budget", bench.element_budget, "Maximum n * trials")
      ->capture_default_str();
  bench_cmd->add_option("--threads", bench.threads, "Worker threads, 0 for all cores")
      ->capture_default_str();

  VerifyConfig verify;
  auto* verify_cmd = app.add_subcommand("verify", "Randomized correctness check of both engines");
  verify_cmd->add_option("--trials", verify.trials)->capture_default_str();
  verify_cmd->add_option("--max-n", verify.max_n)->capture_default_str();
  verify_cmd->add_option("--max-key", verify.max_key)->capture_default_str();
  verify_cmd->add_option("--seed", verify.base_seed)->capture_default_str();

  std::uint64_t model_k = 1024;
  unsigned model_min = 7;
  unsigned model_max = 22;
  std::string model_format = "tsv";
  auto* model_cmd = app.add_subcommand("model", "Print closed-form cost predictions");
  model_cmd->add_option("--k", model_k)->capture_default_str();
  model_cmd->add_option("--exp-min", model_min)->capture_default_str();
  model_cmd->add_option("--exp-max", model_max)->capture_default_str();
  model_cmd->add_option("--format", model_format)
      ->check(CLI::IsMember({"tsv", "csv"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidConfig;
  }

  try {
    if (*bench_cmd) {
      bench.dataset = *parse_dataset_kind(dataset);
      bench.mode = mode == "per-element" ? ReportMode::kPerElement : ReportMode::kTotals;
      bench.format = format == "csv" ? TableFormat::kCsv : TableFormat::kTsv;
      if (engine == "baseline") {
        bench.engines = {MergeEngine::kBaseline};
      } else if (engine == "hop") {
        bench.engines = {MergeEngine::kHop};
      }
      const ExperimentReport report = run_experiment(bench);
      if (out_path.empty()) {
        write_report(std::cout, report, bench.format);
      } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) {
          std::cerr << "cannot open " << out_path << " for writing\n";
          return kExitInvalidConfig;
        }
        write_report(file, report, bench.format);
        write_pivot(std::cout, report, bench.mode, bench.format);
      }
      return kExitOk;
    }
    if (*verify_cmd) {
      const VerifySummary summary = run_verify(verify);
      write_verify_summary(std::cout, summary);
      return summary.ok() ? kExitOk : kExitVerifyFailed;
    }
    if (*model_cmd) {
      write_model(std::cout, run_model(model_k, model_min, model_max),
                  model_format == "csv" ? TableFormat::kCsv : TableFormat::kTsv);
      return kExitOk;
    }
  } catch (const ConfigError& e) {
    std::cerr << "invalid configuration: " << e.what() << '\n';
    return kExitInvalidConfig;
  }
  return kExitOk;
}
