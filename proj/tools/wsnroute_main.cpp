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

// wsnroute: command-line front end.
//
//   gen       write a uniform random dataset
//   knn       chunked kNN graph dump
//   nn        nearest-neighbor route
//   sa        simulated-annealing route
//   simulate  round-based lifetime simulation
//   bench     paired NN vs SA experiment
//
// Exit status: 0 success, 1 usage error, 2 runtime error.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "wsnroute/anneal.hpp"
#include "wsnroute/bench.hpp"
#include "wsnroute/energy.hpp"
#include "wsnroute/errors.hpp"
#include "wsnroute/field.hpp"
#include "wsnroute/knn.hpp"
#include "wsnroute/lifesim.hpp"
#include "wsnroute/numfmt.hpp"
#include "wsnroute/rng.hpp"
#include "wsnroute/route.hpp"

namespace {

using namespace wsnroute;

constexpr int kExitUsage = 1;
constexpr int kExitRuntime = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Flags shared by every command that consumes a field.
struct FieldSource {
  std::string input;
  std::size_t n = 2000;
  double width = kDefaultFieldSide;
  double height = kDefaultFieldSide;
  std::uint64_t seed = 42;

  CLI::Option* input_opt = nullptr;
  CLI::Option* n_opt = nullptr;

  void attach(CLI::App& cmd) {
    input_opt = cmd.add_option("--input", input, "Dataset file (P (x y) records)");
    n_opt = cmd.add_option("--n", n, "Number of generated nodes");
    auto* w = cmd.add_option("--width", width, "Field width");
    auto* h = cmd.add_option("--height", height, "Field height");
    cmd.add_option("--seed", seed, "Generation seed");
    input_opt->excludes(n_opt)->excludes(w)->excludes(h);
  }

  SensorField load() const {
    if (!input.empty()) return load_dataset(input);
    return generate_uniform(n, width, height, seed);
  }
};

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::uint64_t parse_u64(std::string_view s, const std::string& flag) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw UsageError(flag + ": bad integer '" + std::string(s) + "'");
  }
  return v;
}

// "1..10", "3,5,8", or a mix such as "1..3,10".
std::vector<std::uint64_t> parse_seeds(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  std::string_view rest = text;
  while (!rest.empty()) {
    auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    if (auto dots = item.find(".."); dots != std::string_view::npos) {
      const std::uint64_t lo = parse_u64(item.substr(0, dots), "--seeds");
      const std::uint64_t hi = parse_u64(item.substr(dots + 2), "--seeds");
      if (hi < lo) throw UsageError("--seeds: empty range '" + std::string(item) + "'");
      for (std::uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
    } else {
      seeds.push_back(parse_u64(item, "--seeds"));
    }
  }
  if (seeds.empty()) throw UsageError("--seeds: no seeds given");
  return seeds;
}

bench::Format parse_format(const std::string& s) {
  return s == "json" ? bench::Format::kJson : bench::Format::kCsv;
}

void print_length(double length) { std::cout << "length " << format_min_significant(length, 6) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wireless sensor network routing workbench"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a uniform random dataset");
  std::size_t gen_n = 2000;
  double gen_w = kDefaultFieldSide, gen_h = kDefaultFieldSide;
  std::uint64_t gen_seed = 42;
  std::string gen_out = "-";
  gen->add_option("--n", gen_n, "Number of nodes");
  gen->add_option("--width", gen_w, "Field width");
  gen->add_option("--height", gen_h, "Field height");
  gen->add_option("--seed", gen_seed, "Generation seed");
  gen->add_option("--output", gen_out, "Output file ('-' for stdout)");

  // knn
  auto* knn_cmd = app.add_subcommand("knn", "Build the chunked kNN graph");
  FieldSource knn_src;
  knn_src.attach(*knn_cmd);
  std::size_t knn_k = 10, knn_chunk = 256;
  unsigned knn_threads = 1;
  std::string knn_out = "-";
  knn_cmd->add_option("--k", knn_k, "Neighbors per node");
  knn_cmd->add_option("--chunk-size", knn_chunk, "Distance tile size");
  knn_cmd->add_option("--threads", knn_threads, "Worker threads");
  knn_cmd->add_option("--output", knn_out, "Graph dump file ('-' for stdout)");

  // nn
  auto* nn_cmd = app.add_subcommand("nn", "Nearest-neighbor route");
  FieldSource nn_src;
  nn_src.attach(*nn_cmd);
  NodeId nn_start = 0;
  bool nn_closed = false;
  std::size_t nn_k = 0;
  std::string nn_out = "route.txt", nn_plot;
  nn_cmd->add_option("--start", nn_start, "Start node");
  nn_cmd->add_flag("--closed", nn_closed, "Count the return edge to the start");
  nn_cmd->add_option("--k", nn_k, "Use a kNN graph with k neighbors to accelerate the scan");
  nn_cmd->add_option("--output", nn_out, "Route file, one node id per line");
  nn_cmd->add_option("--plot", nn_plot, "Write 'x y' lines in visit order");

  // sa
  auto* sa_cmd = app.add_subcommand("sa", "Simulated-annealing route");
  FieldSource sa_src;
  sa_src.attach(*sa_cmd);
  std::string sa_init = "random", sa_move = "two-opt";
  NodeId sa_start = 0;
  bool paper_budget = false;
  std::optional<double> sa_t0, sa_cooling, sa_tmin;
  std::optional<std::size_t> sa_ipt, sa_max;
  std::string sa_out = "route.txt", sa_plot;
  sa_cmd->add_option("--sa-init", sa_init, "Initial route")->check(CLI::IsMember({"random", "nn"}));
  sa_cmd->add_option("--start", sa_start, "Start node of the nn initial route");
  sa_cmd->add_flag("--paper-budget", paper_budget, "Under-converged budget (1600*n iterations)");
  sa_cmd->add_option("--sa-initial-temp", sa_t0, "Initial temperature");
  sa_cmd->add_option("--sa-cooling", sa_cooling, "Cooling factor in (0,1)");
  sa_cmd->add_option("--sa-iters-per-temp", sa_ipt, "Iterations per temperature step");
  sa_cmd->add_option("--sa-min-temp", sa_tmin, "Stopping temperature");
  sa_cmd->add_option("--sa-max-iters", sa_max, "Iteration cap");
  sa_cmd->add_option("--sa-move", sa_move, "Move kind")->check(CLI::IsMember({"two-opt", "swap"}));
  sa_cmd->add_option("--output", sa_out, "Route file, one node id per line");
  sa_cmd->add_option("--plot", sa_plot, "Write 'x y' lines in visit order");

  // simulate
  auto* sim_cmd = app.add_subcommand("simulate", "Round-based lifetime simulation");
  FieldSource sim_src;
  sim_src.attach(*sim_cmd);
  std::string sim_policy = "rotate", sim_config, sim_route, sim_format = "csv", sim_out = "-";
  NodeId sim_start = 0;
  std::size_t sim_rounds = 1000000;
  sim_cmd->add_option("--policy", sim_policy, "Route policy")->check(CLI::IsMember({"fixed", "rotate"}));
  sim_cmd->add_option("--start", sim_start, "Start node of the fixed route");
  sim_cmd->add_option("--route", sim_route, "Fixed route file (default: nn route from --start)");
  sim_cmd->add_option("--rounds", sim_rounds, "Maximum rounds");
  sim_cmd->add_option("--config", sim_config, "key=value model parameters");
  sim_cmd->add_option("--format", sim_format, "Report format")->check(CLI::IsMember({"csv", "json"}));
  sim_cmd->add_option("--output", sim_out, "Report file ('-' for stdout)");

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "Paired NN vs SA experiment");
  bench::BenchConfig bcfg;
  std::string bench_seeds = "1..10", bench_format = "csv", bench_out = "-";
  bool bench_paper = false;
  bench_cmd->add_option("--n", bcfg.n, "Nodes per field");
  bench_cmd->add_option("--width", bcfg.width, "Field width");
  bench_cmd->add_option("--height", bcfg.height, "Field height");
  bench_cmd->add_option("--seeds", bench_seeds, "Seeds, e.g. 1..10 or 1,4,9");
  bench_cmd->add_option("--k", bcfg.k, "kNN-accelerated NN when > 0");
  bench_cmd->add_flag("--paper-budget", bench_paper, "Under-converged SA budget (1600*n iterations)");
  bench_cmd->add_option("--format", bench_format, "Report format")->check(CLI::IsMember({"csv", "json"}));
  bench_cmd->add_option("--threads", bcfg.threads, "Seeds run in parallel");
  bench_cmd->add_option("--output", bench_out, "Report file ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*gen) {
      write_text(gen_out, write_dataset(generate_uniform(gen_n, gen_w, gen_h, gen_seed)));
    } else if (*knn_cmd) {
      const SensorField field = knn_src.load();
      const auto graph = knn::build_knn_graph(field, knn_k, knn_chunk, {knn_threads});
      write_text(knn_out, knn::dump_graph(graph));
    } else if (*nn_cmd) {
      const SensorField field = nn_src.load();
      Route route = nn_k == 0 ? nn_route(field, nn_start)
                              : nn_route_accelerated(field, knn::build_knn_graph(field, nn_k, 256),
                                                     nn_start);
      route.closed = nn_closed;
      write_text(nn_out, write_route(route));
      if (!nn_plot.empty()) write_text(nn_plot, export_route_plot(field, route));
      print_length(route_length(field, route));
    } else if (*sa_cmd) {
      const SensorField field = sa_src.load();
      const Route initial =
          sa_init == "nn" ? nn_route(field, sa_start) : random_route(field.size(), derive_seed(sa_src.seed, 0));
      AnnealSchedule schedule =
          paper_budget ? paper_budget_schedule(field, initial) : default_schedule(field, initial);
      if (sa_t0) {
        schedule.initial_temp = *sa_t0;
        if (!sa_tmin) schedule.min_temp = 1e-3 * *sa_t0;
      }
      if (sa_cooling) schedule.cooling_factor = *sa_cooling;
      if (sa_ipt) schedule.iters_per_temp = *sa_ipt;
      if (sa_tmin) schedule.min_temp = *sa_tmin;
      if (sa_max) schedule.max_iters = *sa_max;
      schedule.move_kind = sa_move == "swap" ? MoveKind::kSwap : MoveKind::kTwoOptReverse;
      const Route route = sa_route(field, initial, schedule, derive_seed(sa_src.seed, 1));
      write_text(sa_out, write_route(route));
      if (!sa_plot.empty()) write_text(sa_plot, export_route_plot(field, route));
      print_length(route_length(field, route));
    } else if (*sim_cmd) {
      const SensorField field = sim_src.load();
      std::map<std::string, double> extra;
      const energy::ModelConfig model =
          sim_config.empty() ? energy::ModelConfig{}
                             : energy::parse_model_config(read_text(sim_config), &extra);
      const lifesim::DelayParams delay = lifesim::delay_from_config(extra);
      Route fixed = sim_route.empty() ? nn_route(field, sim_start) : parse_route(read_text(sim_route));
      validate_route(field, fixed);
      const auto policy = sim_policy == "fixed" ? lifesim::RoutePolicy::fixed(fixed)
                                                : lifesim::RoutePolicy::rotate_start();
      const energy::EnergyState full(field.size(), model.initial_battery_j);
      const lifesim::SimReport report =
          lifesim::simulate_lifetime(field, policy, full, model.radio, delay, sim_rounds);
      const Route& first = sim_policy == "fixed" ? fixed : nn_route(field, 0);
      const double cost = energy::route_cost(field, first, full, model.radio, model.link);
      write_text(sim_out, bench::export_sim_report(report, cost, parse_format(sim_format)));
    } else if (*bench_cmd) {
      bcfg.seeds = parse_seeds(bench_seeds);
      bcfg.preset = bench_paper ? bench::SaPreset::kPaperBudget : bench::SaPreset::kGenerous;
      bcfg.format = parse_format(bench_format);
      const bench::BenchReport report = bench::run_experiment(bcfg);
      write_text(bench_out, bench::export_report(report, bcfg.format));
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return 0;
}
