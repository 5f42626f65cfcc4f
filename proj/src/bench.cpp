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

#include "wsnroute/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <thread>

#include <json.hpp>

#include "wsnroute/anneal.hpp"
#include "wsnroute/errors.hpp"
#include "wsnroute/knn.hpp"
#include "wsnroute/numfmt.hpp"
#include "wsnroute/rng.hpp"
#include "wsnroute/route.hpp"

namespace wsnroute::bench {

namespace {

constexpr std::size_t kBenchChunkSize = 256;

template <class F>
double timed(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

struct SeedResult {
  BenchRow nn;
  BenchRow sa;
};

SeedResult run_seed(const BenchConfig& cfg, std::uint64_t seed) {
  const SensorField field = generate_uniform(cfg.n, cfg.width, cfg.height, seed);

  Route nn;
  const double nn_time = timed([&] {
    if (cfg.k == 0) {
      nn = nn_route(field, 0);
    } else {
      const knn::KnnGraph graph = knn::build_knn_graph(field, cfg.k, kBenchChunkSize);
      nn = nn_route_accelerated(field, graph, 0);
    }
  });

  const Route initial = random_route(cfg.n, derive_seed(seed, 0));
  const AnnealSchedule schedule = cfg.preset == SaPreset::kPaperBudget
                                      ? paper_budget_schedule(field, initial)
                                      : default_schedule(field, initial);
  Route sa;
  const double sa_time = timed([&] { sa = sa_route(field, initial, schedule, derive_seed(seed, 1)); });

  return {BenchRow{seed, Algorithm::kNN, route_length(field, nn), nn_time},
          BenchRow{seed, Algorithm::kSA, route_length(field, sa), sa_time}};
}

std::string_view next_field(std::string_view& line) {
  auto comma = line.find(',');
  std::string_view f = line.substr(0, comma);
  line = comma == std::string_view::npos ? std::string_view{} : line.substr(comma + 1);
  return f;
}

Algorithm parse_algorithm(std::string_view s, std::size_t line_no) {
  if (s == "NN") return Algorithm::kNN;
  if (s == "SA") return Algorithm::kSA;
  throw ParseError(line_no, "unknown algorithm '" + std::string(s) + "'");
}

double parse_number(std::string_view s, std::size_t line_no) {
  auto v = parse_finite_double(s);
  if (!v) throw ParseError(line_no, "bad number '" + std::string(s) + "'");
  return *v;
}

}  // namespace

std::string_view algorithm_name(Algorithm a) { return a == Algorithm::kNN ? "NN" : "SA"; }

void validate(const BenchConfig& cfg) {
  if (cfg.seeds.empty()) throw InvalidArgument("at least one seed is required");
  if (cfg.n < 2) throw InvalidArgument("benchmark needs n >= 2");
  if (cfg.k >= cfg.n) throw InvalidArgument("k must be below n");
}

std::vector<double> paired_ratios(const BenchReport& report) {
  std::vector<double> ratios;
  for (std::size_t i = 0; i + 1 < report.rows.size(); i += 2) {
    ratios.push_back(report.rows[i + 1].cost / report.rows[i].cost);
  }
  return ratios;
}

void aggregate(BenchReport& report) {
  double nn_cost = 0, sa_cost = 0, nn_time = 0, sa_time = 0;
  std::size_t nn_count = 0, sa_count = 0;
  for (const BenchRow& row : report.rows) {
    if (row.algorithm == Algorithm::kNN) {
      nn_cost += row.cost;
      nn_time += row.wall_time_s;
      ++nn_count;
    } else {
      sa_cost += row.cost;
      sa_time += row.wall_time_s;
      ++sa_count;
    }
  }
  report.mean_cost_nn = nn_count ? nn_cost / static_cast<double>(nn_count) : 0.0;
  report.mean_time_nn_s = nn_count ? nn_time / static_cast<double>(nn_count) : 0.0;
  report.mean_cost_sa = sa_count ? sa_cost / static_cast<double>(sa_count) : 0.0;
  report.mean_time_sa_s = sa_count ? sa_time / static_cast<double>(sa_count) : 0.0;
  const auto ratios = paired_ratios(report);
  double sum = 0;
  for (double r : ratios) sum += r;
  report.mean_ratio_sa_nn = ratios.empty() ? 0.0 : sum / static_cast<double>(ratios.size());
}

BenchReport run_experiment(const BenchConfig& cfg) {
  validate(cfg);
  std::vector<SeedResult> results(cfg.seeds.size());
  const unsigned threads =
      static_cast<unsigned>(std::clamp<std::size_t>(cfg.threads, 1, cfg.seeds.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cfg.seeds.size(); i = next++) {
      results[i] = run_seed(cfg, cfg.seeds[i]);
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  BenchReport report;
  for (const SeedResult& r : results) {
    report.rows.push_back(r.nn);
    report.rows.push_back(r.sa);
  }
  aggregate(report);
  return report;
}

std::string export_report(const BenchReport& report, Format format) {
  if (format == Format::kJson) {
    nlohmann::json rows = nlohmann::json::array();
    for (const BenchRow& row : report.rows) {
      rows.push_back({{"seed", row.seed},
                      {"algorithm", algorithm_name(row.algorithm)},
                      {"cost", row.cost},
                      {"wall_time_s", row.wall_time_s}});
    }
    nlohmann::json doc = {
        {"rows", rows},
        {"aggregates",
         {{"mean_cost", {{"NN", report.mean_cost_nn}, {"SA", report.mean_cost_sa}}},
          {"mean_wall_time_s", {{"NN", report.mean_time_nn_s}, {"SA", report.mean_time_sa_s}}},
          {"mean_ratio_sa_nn", report.mean_ratio_sa_nn}}}};
    return doc.dump(2) + "\n";
  }

  std::string out = "seed,algorithm,cost,wall_time_s\n";
  auto line = [&](std::string_view a, std::string_view b, double cost, std::string_view t) {
    out.append(a).append(",").append(b).append(",");
    out += format_min_significant(cost, 6);
    out.append(",").append(t).append("\n");
  };
  for (const BenchRow& row : report.rows) {
    line(std::to_string(row.seed), algorithm_name(row.algorithm), row.cost,
         format_shortest(row.wall_time_s));
  }
  line("mean", "NN", report.mean_cost_nn, format_shortest(report.mean_time_nn_s));
  line("mean", "SA", report.mean_cost_sa, format_shortest(report.mean_time_sa_s));
  line("mean_ratio", "SA/NN", report.mean_ratio_sa_nn, "");
  return out;
}

BenchReport parse_report(std::string_view text, Format format) {
  BenchReport report;
  if (format == Format::kJson) {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
      for (const auto& row : doc.at("rows")) {
        report.rows.push_back(BenchRow{row.at("seed").get<std::uint64_t>(),
                                       parse_algorithm(row.at("algorithm").get<std::string>(), 0),
                                       row.at("cost").get<double>(),
                                       row.at("wall_time_s").get<double>()});
      }
      const auto& agg = doc.at("aggregates");
      report.mean_cost_nn = agg.at("mean_cost").at("NN").get<double>();
      report.mean_cost_sa = agg.at("mean_cost").at("SA").get<double>();
      report.mean_time_nn_s = agg.at("mean_wall_time_s").at("NN").get<double>();
      report.mean_time_sa_s = agg.at("mean_wall_time_s").at("SA").get<double>();
      report.mean_ratio_sa_nn = agg.at("mean_ratio_sa_nn").get<double>();
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(0, std::string("bad report JSON: ") + e.what());
    }
    return report;
  }

  std::size_t line_no = 0;
  bool header = true;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (header) {
      if (line != "seed,algorithm,cost,wall_time_s") throw ParseError(line_no, "bad CSV header");
      header = false;
      continue;
    }
    const std::string_view seed = next_field(line);
    const std::string_view algo = next_field(line);
    const double cost = parse_number(next_field(line), line_no);
    const std::string_view time = next_field(line);
    if (seed == "mean") {
      const double t = parse_number(time, line_no);
      if (parse_algorithm(algo, line_no) == Algorithm::kNN) {
        report.mean_cost_nn = cost;
        report.mean_time_nn_s = t;
      } else {
        report.mean_cost_sa = cost;
        report.mean_time_sa_s = t;
      }
    } else if (seed == "mean_ratio") {
      report.mean_ratio_sa_nn = cost;
    } else {
      std::uint64_t s = 0;
      auto [ptr, ec] = std::from_chars(seed.data(), seed.data() + seed.size(), s);
      if (ec != std::errc{} || ptr != seed.data() + seed.size()) {
        throw ParseError(line_no, "bad seed '" + std::string(seed) + "'");
      }
      report.rows.push_back(
          BenchRow{s, parse_algorithm(algo, line_no), cost, parse_number(time, line_no)});
    }
  }
  if (header) throw ParseError(1, "missing CSV header");
  return report;
}

std::string export_sim_report(const lifesim::SimReport& report, double route_cost, Format format) {
  if (format == Format::kJson) {
    nlohmann::json doc = {{"rounds_completed", report.rounds_completed},
                          {"first_death_round", nullptr},
                          {"total_energy_j", report.total_energy_j},
                          {"deadline_violations", report.deadline_violations},
                          {"route_cost", route_cost},
                          {"per_node_residual", report.per_node_residual}};
    if (report.first_death_round) doc["first_death_round"] = *report.first_death_round;
    return doc.dump(2) + "\n";
  }
  std::string out = "rounds_completed,first_death_round,total_energy_j,deadline_violations,route_cost\n";
  out += std::to_string(report.rounds_completed);
  out += ',';
  if (report.first_death_round) out += std::to_string(*report.first_death_round);
  out += ',';
  out += format_min_significant(report.total_energy_j, 6);
  out += ',';
  out += std::to_string(report.deadline_violations);
  out += ',';
  out += format_min_significant(route_cost, 6);
  out += '\n';
  return out;
}

}  // namespace wsnroute::bench
