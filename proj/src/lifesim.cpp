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

#include "wsnroute/lifesim.hpp"

#include <cmath>

#include "wsnroute/errors.hpp"

namespace wsnroute::lifesim {

void validate(const DelayParams& p) {
  if (!(p.per_hop_s > 0.0) || !std::isfinite(p.per_hop_s)) {
    throw InvalidArgument("per-hop delay must be positive");
  }
  if (!(p.prop_speed > 0.0) || !std::isfinite(p.prop_speed)) {
    throw InvalidArgument("propagation speed must be positive");
  }
  if (!(p.d_max_s > 0.0)) throw InvalidArgument("deadline must be positive");
}

double path_delay(const SensorField& field, const Route& route, const DelayParams& dp) {
  validate_route(field, route);
  const auto& o = route.order;
  double total = 0.0;
  auto hop = [&](NodeId a, NodeId b) { total += field.distance(a, b) / dp.prop_speed + dp.per_hop_s; };
  for (std::size_t i = 1; i < o.size(); ++i) hop(o[i - 1], o[i]);
  if (route.closed && o.size() > 1) hop(o.back(), o.front());
  return total;
}

DelayVerdict check_delay(const SensorField& field, const Route& route, const DelayParams& dp) {
  const double delay = path_delay(field, route, dp);
  if (delay <= dp.d_max_s) return {true, 0.0};
  return {false, delay - dp.d_max_s};
}

std::vector<double> round_charges(const SensorField& field, const Route& route,
                                  const energy::RadioParams& rp) {
  validate_route(field, route);
  const auto& o = route.order;
  std::vector<double> charge(field.size(), 0.0);
  const double rx = energy::rx_energy(rp, rp.packet_bits);
  auto link = [&](NodeId from, NodeId to) {
    charge[from] += energy::tx_energy(rp, rp.packet_bits, field.distance(from, to));
    charge[to] += rx;
  };
  for (std::size_t i = 1; i < o.size(); ++i) link(o[i - 1], o[i]);
  if (route.closed && o.size() > 1) link(o.back(), o.front());
  return charge;
}

SimReport simulate_lifetime(const SensorField& field, const RoutePolicy& policy,
                            energy::EnergyState state, const energy::RadioParams& rp,
                            const DelayParams& dp, std::size_t max_rounds) {
  energy::validate(rp);
  validate(dp);
  const std::size_t n = field.size();
  if (n == 0) throw InvalidArgument("field has no nodes");
  if (state.size() != n) throw InvalidArgument("energy state size does not match field");
  if (policy.kind == RoutePolicy::Kind::kFixedRoute) validate_route(field, policy.route);

  // Per-route data is reused across rounds: one entry for a fixed route, one
  // per start node under rotation.
  struct RoundPlan {
    Route route;
    std::vector<double> charges;
    bool feasible = true;
  };
  std::vector<std::optional<RoundPlan>> plans(
      policy.kind == RoutePolicy::Kind::kFixedRoute ? 1 : n);
  auto plan_for = [&](std::size_t round) -> const RoundPlan& {
    const std::size_t slot = policy.kind == RoutePolicy::Kind::kFixedRoute ? 0 : (round - 1) % n;
    auto& plan = plans[slot];
    if (!plan) {
      Route r = policy.kind == RoutePolicy::Kind::kFixedRoute
                    ? policy.route
                    : nn_route(field, static_cast<NodeId>(slot));
      std::vector<double> charges = round_charges(field, r, rp);
      const bool feasible = check_delay(field, r, dp).feasible;
      plan = RoundPlan{std::move(r), std::move(charges), feasible};
    }
    return *plan;
  };

  SimReport report;
  for (std::size_t round = 1; round <= max_rounds; ++round) {
    const RoundPlan& plan = plan_for(round);
    bool died = false;
    for (NodeId node : plan.route.order) {
      const double charge = plan.charges[node];
      if (charge == 0.0) continue;
      const double have = state.residual(node);
      if (have < charge) {
        report.total_energy_j += have;
        state.set_residual(node, 0.0);
        died = true;
        break;
      }
      report.total_energy_j += charge;
      state.set_residual(node, have - charge);
    }
    if (died) {
      report.first_death_round = round;
      break;
    }
    ++report.rounds_completed;
    if (!plan.feasible) ++report.deadline_violations;
  }
  report.per_node_residual = state.residuals();
  return report;
}

DelayParams delay_from_config(const std::map<std::string, double>& extra) {
  DelayParams dp;
  for (const auto& [key, value] : extra) {
    if (key == "per_hop_s") dp.per_hop_s = value;
    else if (key == "prop_speed") dp.prop_speed = value;
    else if (key == "d_max_s") dp.d_max_s = value;
    else throw InvalidArgument("unknown config key '" + key + "'");
  }
  validate(dp);
  return dp;
}

}  // namespace wsnroute::lifesim
