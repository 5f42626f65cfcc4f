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

#include <doctest.h>

#include <json.hpp>

#include "wsnroute/bench.hpp"
#include "wsnroute/errors.hpp"

using namespace wsnroute;
using namespace wsnroute::bench;

namespace {

BenchConfig small_config() {
  BenchConfig cfg;
  cfg.n = 60;
  cfg.width = 1000;
  cfg.height = 1000;
  cfg.seeds = {1, 2};
  cfg.preset = SaPreset::kPaperBudget;
  return cfg;
}

}  // namespace

TEST_CASE("run_experiment: row layout and aggregates") {
  const BenchReport r = run_experiment(small_config());
  REQUIRE(r.rows.size() == 4);
  CHECK(r.rows[0].seed == 1);
  CHECK(r.rows[0].algorithm == Algorithm::kNN);
  CHECK(r.rows[1].seed == 1);
  CHECK(r.rows[1].algorithm == Algorithm::kSA);
  CHECK(r.rows[2].seed == 2);
  CHECK(r.rows[3].algorithm == Algorithm::kSA);
  for (const BenchRow& row : r.rows) {
    CHECK(row.cost > 0);
    CHECK(row.wall_time_s >= 0);
  }
  CHECK(r.mean_cost_nn == doctest::Approx((r.rows[0].cost + r.rows[2].cost) / 2));
  CHECK(r.mean_cost_sa == doctest::Approx((r.rows[1].cost + r.rows[3].cost) / 2));
  const auto ratios = paired_ratios(r);
  REQUIRE(ratios.size() == 2);
  CHECK(r.mean_ratio_sa_nn == doctest::Approx((ratios[0] + ratios[1]) / 2));
}

TEST_CASE("run_experiment: costs do not depend on threads or kNN acceleration") {
  BenchConfig cfg = small_config();
  cfg.seeds = {3, 4, 5};
  const BenchReport base = run_experiment(cfg);
  cfg.threads = 3;
  cfg.k = 6;
  const BenchReport other = run_experiment(cfg);
  REQUIRE(other.rows.size() == base.rows.size());
  for (std::size_t i = 0; i < base.rows.size(); ++i) {
    CHECK(other.rows[i].seed == base.rows[i].seed);
    CHECK(other.rows[i].cost == base.rows[i].cost);
  }
}

TEST_CASE("config validation") {
  BenchConfig cfg = small_config();
  cfg.seeds.clear();
  CHECK_THROWS_AS(run_experiment(cfg), InvalidArgument);
  cfg = small_config();
  cfg.k = 60;
  CHECK_THROWS_AS(run_experiment(cfg), InvalidArgument);
}

TEST_CASE("report CSV and JSON round trip") {
  BenchReport r;
  r.rows = {{1, Algorithm::kNN, 800000.0, 0.004}, {1, Algorithm::kSA, 1190123.456789, 2.5},
            {2, Algorithm::kNN, 0.5, 1e-7}, {2, Algorithm::kSA, 0.75, 3.0}};
  aggregate(r);

  const std::string csv = export_report(r, Format::kCsv);
  CHECK(csv.rfind("seed,algorithm,cost,wall_time_s\n1,NN,800000,0.004\n", 0) == 0);
  CHECK(csv.find("\n2,NN,0.500000,1e-07\n") != std::string::npos);
  CHECK(csv.find("\nmean_ratio,SA/NN,") != std::string::npos);
  CHECK(parse_report(csv, Format::kCsv) == r);

  const std::string json = export_report(r, Format::kJson);
  const auto doc = nlohmann::json::parse(json);
  CHECK(doc.at("rows").size() == 4);
  CHECK(doc.at("rows")[1].at("algorithm") == "SA");
  CHECK(doc.at("aggregates").at("mean_cost").at("NN").get<double>() == r.mean_cost_nn);
  CHECK(parse_report(json, Format::kJson) == r);

  CHECK_THROWS_AS(parse_report("nope\n", Format::kCsv), ParseError);
  CHECK_THROWS_AS(parse_report("seed,algorithm,cost,wall_time_s\n1,XX,1,1\n", Format::kCsv),
                  ParseError);
  CHECK_THROWS_AS(parse_report("{", Format::kJson), ParseError);
}

TEST_CASE("simulation report export") {
  lifesim::SimReport s;
  s.rounds_completed = 3;
  s.first_death_round = 4;
  s.total_energy_j = 6.0;
  s.per_node_residual = {0.0, 3.0};
  CHECK(export_sim_report(s, 1.5, Format::kCsv) ==
        "rounds_completed,first_death_round,total_energy_j,deadline_violations,route_cost\n"
        "3,4,6.00000,0,1.50000\n");
  const auto doc = nlohmann::json::parse(export_sim_report(s, 1.5, Format::kJson));
  CHECK(doc.at("first_death_round") == 4);
  CHECK(doc.at("per_node_residual").size() == 2);
  s.first_death_round.reset();
  CHECK(nlohmann::json::parse(export_sim_report(s, 1.5, Format::kJson)).at("first_death_round").is_null());
}
