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
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "wsnroute/field.hpp"
#include "wsnroute/route.hpp"

namespace wsnroute::energy {

// First-order radio model. Distances are in field units, read as meters.
struct RadioParams {
  double e_elec = 50e-9;     // J/bit, transmitter and receiver electronics
  double eps_amp = 100e-12;  // J/bit/m^alpha, transmit amplifier
  double alpha = 2.0;        // path-loss exponent, in [2, 4]
  std::uint64_t packet_bits = 2000;
};

// Weights of the composite link cost. error_ref_distance is the link length
// at which the error term equals 0.5; it also normalizes the energy term.
struct LinkCostParams {
  double w_energy = 1.0;
  double w_reserve = 1.0;
  double w_error = 1.0;
  double error_ref_distance = 1000.0;
};

void validate(const RadioParams& p);
void validate(const LinkCostParams& p);

/// Battery levels of every node. Only the lifetime simulator mutates it.
class EnergyState {
 public:
  EnergyState(std::size_t n, double initial_j);

  std::size_t size() const noexcept { return residual_.size(); }
  double initial() const noexcept { return initial_; }
  double residual(std::size_t node) const { return residual_[node]; }
  const std::vector<double>& residuals() const noexcept { return residual_; }

  /// Sets a node's level, clamped into [0, initial].
  void set_residual(std::size_t node, double joules);

 private:
  double initial_;
  std::vector<double> residual_;
};

/// e_elec*bits + eps_amp*bits*d^alpha.
double tx_energy(const RadioParams& p, std::uint64_t bits, double d);

/// e_elec*bits.
double rx_energy(const RadioParams& p, std::uint64_t bits);

/// 1 - exp(-ln2 * d / ref): 0 at d = 0, 0.5 at d = ref, saturating at 1.
double link_error(double d, double ref_distance);

/// w_energy * tx(d)/tx(ref) + w_reserve * (1 - residual[j]/initial)
///   + w_error * link_error(d).
/// Throws InvalidArgument when i == j and DeadNodeError when i is drained.
double link_cost(const SensorField& field, NodeId i, NodeId j, const EnergyState& state,
                 const RadioParams& rp, const LinkCostParams& lcp);

/// Sum of link_cost over consecutive route pairs (and the closing pair).
double route_cost(const SensorField& field, const Route& route, const EnergyState& state,
                  const RadioParams& rp, const LinkCostParams& lcp);

struct ModelConfig {
  RadioParams radio;
  LinkCostParams link;
  double initial_battery_j = 0.5;
};

/// Flat `key=value` file; `#` starts a comment. Keys: e_elec, eps_amp,
/// alpha, packet_bits, w_energy, w_reserve, w_error, error_ref_distance,
/// initial_battery_j. Other keys are returned through `extra` when it is
/// non-null and rejected otherwise.
ModelConfig parse_model_config(std::string_view text,
                               std::map<std::string, double>* extra = nullptr);

}  // namespace wsnroute::energy
