/*
 * Copyright (c) 2026, The wsnroute Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wsnroute/field.hpp"
#include "wsnroute/lifesim.hpp"

namespace wsnroute::bench {

enum class SaPreset { kPaperBudget, kGenerous };
enum class Format { kCsv, kJson };
enum class Algorithm { kNN, kSA };

std::string_view algorithm_name(Algorithm a);

struct BenchConfig {
  std::size_t n = 2000;
  double width = kDefaultFieldSide;
  double height = kDefaultFieldSide;
  std::vector<std::uint64_t> seeds;
  /// 0 runs the plain nearest-neighbor scan; k > 0 builds a kNN graph
  /// (chunk size 256) and runs the accelerated variant, timing both steps.
  std::size_t k = 0;
  SaPreset preset = SaPreset::kPaperBudget;
  Format format = Format::kCsv;
  unsigned threads = 1;
};

void validate(const BenchConfig& cfg);

struct BenchRow {
  std::uint64_t seed = 0;
  Algorithm algorithm = Algorithm::kNN;
  double cost = 0.0;         // geometric route length
  double wall_time_s = 0.0;  // algorithm call only

  friend bool operator==(const BenchRow&, const BenchRow&) = default;
};

struct BenchReport {
  std::vector<BenchRow> rows;  // seed order, NN before SA
  double mean_cost_nn = 0.0;
  double mean_cost_sa = 0.0;
  double mean_time_nn_s = 0.0;
  double mean_time_sa_s = 0.0;
  /// Mean over seeds of the paired ratio cost(SA) / cost(NN).
  double mean_ratio_sa_nn = 0.0;

  friend bool operator==(const BenchReport&, const BenchReport&) = default;
};

/// Per-seed SA/NN cost ratios, in seed order.
std::vector<double> paired_ratios(const BenchReport& report);

/// For each seed: generate the field, run nearest neighbor from node 0 and
/// annealing from a random route under the chosen preset, and record the
/// route lengths and wall times.
BenchReport run_experiment(const BenchConfig& cfg);

/// Recomputes the aggregate fields from `rows`.
void aggregate(BenchReport& report);

/// CSV: header `seed,algorithm,cost,wall_time_s`, one row per (seed,
/// algorithm), then footer rows `mean,NN,..`, `mean,SA,..` and
/// `mean_ratio,SA/NN,<ratio>,`. JSON carries the same fields.
std::string export_report(const BenchReport& report, Format format);
BenchReport parse_report(std::string_view text, Format format);

/// Flat record of a lifetime run. CSV has one header and one data row;
/// per-node residuals appear in JSON only. `route_cost` is the link cost of
/// the first round's route at full batteries.
std::string export_sim_report(const lifesim::SimReport& report, double route_cost, Format format);

}  // namespace wsnroute::bench
