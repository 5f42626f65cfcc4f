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

#include <cmath>

#include "wsnroute/energy.hpp"
#include "wsnroute/errors.hpp"

using namespace wsnroute;
using namespace wsnroute::energy;

TEST_CASE("radio model") {
  const RadioParams rp;
  // 50e-9 * 2000 + 100e-12 * 2000 * 100^2
  CHECK(tx_energy(rp, 2000, 100.0) == doctest::Approx(2.1e-3).epsilon(1e-12));
  CHECK(rx_energy(rp, 2000) == doctest::Approx(1e-4).epsilon(1e-12));
  CHECK(tx_energy(rp, 2000, 0.0) == rx_energy(rp, 2000));
  CHECK_THROWS_AS(tx_energy(rp, 2000, -1.0), InvalidArgument);

  RadioParams quartic = rp;
  quartic.alpha = 4.0;
  CHECK(tx_energy(quartic, 1, 10.0) == doctest::Approx(50e-9 + 100e-12 * 1e4).epsilon(1e-12));
  for (double d = 0; d < 5000; d += 250) CHECK(tx_energy(rp, 2000, d) <= tx_energy(rp, 2000, d + 1));
}

TEST_CASE("parameter validation") {
  RadioParams rp;
  rp.alpha = 1.5;
  CHECK_THROWS_AS(validate(rp), InvalidArgument);
  rp = RadioParams{};
  rp.e_elec = 0;
  CHECK_THROWS_AS(validate(rp), InvalidArgument);
  LinkCostParams lp;
  lp.w_energy = -1;
  CHECK_THROWS_AS(validate(lp), InvalidArgument);
  lp = LinkCostParams{0, 0, 0, 1000};
  CHECK_THROWS_AS(validate(lp), InvalidArgument);
  CHECK_THROWS_AS(EnergyState(3, 0.0), InvalidArgument);
}

TEST_CASE("energy state clamps residuals") {
  EnergyState s(3, 0.5);
  CHECK(s.residual(2) == 0.5);
  s.set_residual(0, -1.0);
  s.set_residual(1, 9.0);
  CHECK(s.residual(0) == 0.0);
  CHECK(s.residual(1) == 0.5);
}

TEST_CASE("link cost terms") {
  const SensorField f({{0, 0}, {1000, 0}, {0, 10}}, 1000, 10);
  EnergyState s(3, 0.5);
  const RadioParams rp;
  const LinkCostParams lp;
  // At the reference distance: energy term 1, reserve term 0, error term 1/2.
  CHECK(link_cost(f, 0, 1, s, rp, lp) == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(link_error(0.0, 1000) == 0.0);
  CHECK(link_error(1000, 1000) == doctest::Approx(0.5).epsilon(1e-15));

  // A drained receiver raises the reserve term by its spent fraction.
  s.set_residual(1, 0.125);
  CHECK(link_cost(f, 0, 1, s, rp, lp) == doctest::Approx(2.25).epsilon(1e-12));

  CHECK(link_cost(f, 0, 2, s, rp, lp) < link_cost(f, 0, 1, s, rp, lp));
  CHECK_THROWS_AS(link_cost(f, 0, 0, s, rp, lp), InvalidArgument);
  s.set_residual(0, 0.0);
  CHECK_THROWS_AS(link_cost(f, 0, 1, s, rp, lp), DeadNodeError);

  EnergyState full(3, 0.5);
  const Route r{{2, 0, 1}, false};
  CHECK(route_cost(f, r, full, rp, lp) ==
        doctest::Approx(link_cost(f, 2, 0, full, rp, lp) + link_cost(f, 0, 1, full, rp, lp)));
}

TEST_CASE("model config parsing") {
  const ModelConfig def = parse_model_config("");
  CHECK(def.initial_battery_j == 0.5);
  CHECK(def.radio.packet_bits == 2000);

  std::map<std::string, double> extra;
  const ModelConfig c = parse_model_config(
      "# radio\n alpha = 3\npacket_bits=4000\r\n\ninitial_battery_j=2\nd_max_s = inf\n", &extra);
  CHECK(c.radio.alpha == 3.0);
  CHECK(c.radio.packet_bits == 4000);
  CHECK(c.initial_battery_j == 2.0);
  CHECK(std::isinf(extra.at("d_max_s")));

  CHECK_THROWS_AS(parse_model_config("bogus=1\n"), ParseError);
  CHECK_THROWS_AS(parse_model_config("alpha=inf\n"), ParseError);
  CHECK_THROWS_AS(parse_model_config("packet_bits=1.5\n"), ParseError);
  try {
    parse_model_config("alpha=3\nalpha\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_model_config("alpha=5\n"), InvalidArgument);
}
