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

#include <algorithm>
#include <numeric>

#include "wsnroute/errors.hpp"
#include "wsnroute/lifesim.hpp"
#include "wsnroute/rng.hpp"

using namespace wsnroute;
using namespace wsnroute::lifesim;
using energy::EnergyState;
using energy::RadioParams;

namespace {

const SensorField kSquare({{0, 0}, {100, 0}, {100, 100}, {0, 100}}, 100, 100);

}  // namespace

TEST_CASE("delay model") {
  const SensorField f({{0, 0}, {300, 0}}, 300, 1);
  const Route r{{0, 1}, false};
  DelayParams dp;
  CHECK(path_delay(f, r, dp) == doctest::Approx(1.001e-3).epsilon(1e-12));
  dp.d_max_s = path_delay(f, r, dp);
  CHECK(check_delay(f, r, dp).feasible);
  dp.d_max_s = 1e-3;
  const DelayVerdict v = check_delay(f, r, dp);
  CHECK_FALSE(v.feasible);
  CHECK(v.excess_s == doctest::Approx(1e-6).epsilon(1e-6));
  dp.per_hop_s = 0;
  CHECK_THROWS_AS(validate(dp), InvalidArgument);
  CHECK_THROWS_AS(delay_from_config({{"nope", 1.0}}), InvalidArgument);
  CHECK(delay_from_config({{"d_max_s", 2.0}}).d_max_s == 2.0);
}

TEST_CASE("round charges: endpoints pay one side only") {
  const auto c = round_charges(kSquare, Route{{0, 1, 2, 3}, false}, RadioParams{});
  CHECK(c[0] == doctest::Approx(2.1e-3));
  CHECK(c[1] == doctest::Approx(2.2e-3));
  CHECK(c[2] == doctest::Approx(2.2e-3));
  CHECK(c[3] == doctest::Approx(1e-4));
}

TEST_CASE("two-node hand trace") {
  const SensorField f({{0, 0}, {2, 0}}, 2, 1);
  RadioParams rp;
  rp.e_elec = 0.5;
  rp.eps_amp = 0.25;
  rp.alpha = 2.0;
  rp.packet_bits = 1;
  // tx = 1.5, rx = 0.5; node 0 runs out in round 4.
  const SimReport r = simulate_lifetime(f, RoutePolicy::fixed(Route{{0, 1}, false}),
                                        EnergyState(2, 4.5), rp, DelayParams{}, 100);
  CHECK(r.rounds_completed == 3);
  REQUIRE(r.first_death_round);
  CHECK(*r.first_death_round == 4);
  CHECK(r.total_energy_j == doctest::Approx(6.0));
  CHECK(r.per_node_residual[0] == 0.0);
  CHECK(r.per_node_residual[1] == doctest::Approx(3.0));
  CHECK(r.deadline_violations == 0);
}

TEST_CASE("square fixture: fixed route death round and rotation balance") {
  const SimReport fixed = simulate_lifetime(kSquare, RoutePolicy::fixed(Route{{0, 1, 2, 3}, false}),
                                            EnergyState(4, 0.5), RadioParams{}, DelayParams{},
                                            1000000);
  REQUIRE(fixed.first_death_round);
  CHECK(*fixed.first_death_round == 228);
  CHECK(fixed.rounds_completed == 227);

  CHECK(nn_route(kSquare, 1).order == std::vector<NodeId>{1, 0, 3, 2});
  CHECK(nn_route(kSquare, 2).order == std::vector<NodeId>{2, 1, 0, 3});
  CHECK(nn_route(kSquare, 3).order == std::vector<NodeId>{3, 0, 1, 2});
  const SimReport rot = simulate_lifetime(kSquare, RoutePolicy::rotate_start(), EnergyState(4, 0.5),
                                          RadioParams{}, DelayParams{}, 1000000);
  REQUIRE(rot.first_death_round);
  CHECK(*rot.first_death_round > *fixed.first_death_round);
}

TEST_CASE("simulation conserves energy") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const SensorField f = generate_uniform(30, 500, 500, seed);
    const double battery = 0.05 + 0.01 * static_cast<double>(seed);
    const RoutePolicy policy =
        seed % 2 ? RoutePolicy::rotate_start() : RoutePolicy::fixed(nn_route(f, 0));
    const SimReport r = simulate_lifetime(f, policy, EnergyState(30, battery), RadioParams{},
                                          DelayParams{}, 1000000);
    double left = 0;
    for (double v : r.per_node_residual) {
      CHECK(v >= 0.0);
      CHECK(v <= battery);
      left += v;
    }
    CHECK(left + r.total_energy_j == doctest::Approx(30 * battery).epsilon(1e-9));
    REQUIRE(r.first_death_round);
    CHECK(*r.first_death_round == r.rounds_completed + 1);
  }
}

TEST_CASE("round limit and deadline counting") {
  const SensorField f = generate_uniform(10, 1000, 1000, 1);
  DelayParams dp;
  dp.d_max_s = 1e-9;
  const SimReport r = simulate_lifetime(f, RoutePolicy::rotate_start(), EnergyState(10, 0.5),
                                        RadioParams{}, dp, 5);
  CHECK(r.rounds_completed == 5);
  CHECK_FALSE(r.first_death_round);
  CHECK(r.deadline_violations == 5);

  CHECK(simulate_lifetime(f, RoutePolicy::rotate_start(), EnergyState(10, 0.5), RadioParams{},
                          DelayParams{}, 0)
            .rounds_completed == 0);
  CHECK_THROWS_AS(simulate_lifetime(f, RoutePolicy::rotate_start(), EnergyState(9, 0.5),
                                    RadioParams{}, DelayParams{}, 5),
                  InvalidArgument);
  CHECK_THROWS_AS(simulate_lifetime(f, RoutePolicy::fixed(Route{{0, 1}, false}),
                                    EnergyState(10, 0.5), RadioParams{}, DelayParams{}, 5),
                  InvalidArgument);
}

TEST_CASE("a larger battery never shortens the lifetime") {
  const SensorField f = generate_uniform(25, 2000, 2000, 12);
  std::size_t prev = 0;
  for (double battery : {0.01, 0.02, 0.05, 0.1, 0.2}) {
    const SimReport r = simulate_lifetime(f, RoutePolicy::rotate_start(), EnergyState(25, battery),
                                          RadioParams{}, DelayParams{}, 1000000);
    CHECK(r.rounds_completed >= prev);
    prev = r.rounds_completed;
  }
}
