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
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wsnroute/energy.hpp"
#include "wsnroute/field.hpp"
#include "wsnroute/route.hpp"

namespace wsnroute::lifesim {

struct DelayParams {
  double per_hop_s = 1e-3;
  double prop_speed = 3e8;  // field units per second
  double d_max_s = std::numeric_limits<double>::infinity();
};

void validate(const DelayParams& p);

/// End-to-end delay: sum over hops of distance/prop_speed + per_hop_s.
double path_delay(const SensorField& field, const Route& route, const DelayParams& dp);

struct DelayVerdict {
  bool feasible = true;
  double excess_s = 0.0;  ///< path_delay - d_max_s when violated, else 0
};

/// Feasible iff path_delay <= d_max_s (boundary inclusive).
DelayVerdict check_delay(const SensorField& field, const Route& route, const DelayParams& dp);

/// How each round's route is chosen.
struct RoutePolicy {
  enum class Kind { kFixedRoute, kRotateStart };

  Kind kind = Kind::kRotateStart;
  Route route;  ///< used by kFixedRoute only

  static RoutePolicy fixed(Route r) { return {Kind::kFixedRoute, std::move(r)}; }
  static RoutePolicy rotate_start() { return {Kind::kRotateStart, {}}; }
};

struct SimReport {
  std::size_t rounds_completed = 0;
  std::optional<std::size_t> first_death_round;
  double total_energy_j = 0.0;
  std::vector<double> per_node_residual;
  std::size_t deadline_violations = 0;

  friend bool operator==(const SimReport&, const SimReport&) = default;
};

/// Per-node energy charged for one sweep along `route`: the first node only
/// transmits, the last only receives, every other node does both.
std::vector<double> round_charges(const SensorField& field, const Route& route,
                                  const energy::RadioParams& rp);

/// Round-based depletion. Round r (1-based) uses the fixed route, or the
/// nearest-neighbor route from node (r-1) mod n under rotation. Charges are
/// applied in visit order; a node that cannot pay its charge spends what it
/// has, dies, and ends the simulation. Lifetime is the number of rounds
/// completed before the first death. Deadline violations are counted over
/// completed rounds.
SimReport simulate_lifetime(const SensorField& field, const RoutePolicy& policy,
                            energy::EnergyState state, const energy::RadioParams& rp,
                            const DelayParams& dp, std::size_t max_rounds);

/// Reads per_hop_s, prop_speed and d_max_s out of the extra keys left by
/// energy::parse_model_config. Any other leftover key is an error.
DelayParams delay_from_config(const std::map<std::string, double>& extra);

}  // namespace wsnroute::lifesim
