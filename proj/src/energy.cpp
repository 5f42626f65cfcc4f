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

#include "wsnroute/energy.hpp"

#include <cmath>
#include <numbers>
#include <optional>

#include "wsnroute/errors.hpp"
#include "wsnroute/numfmt.hpp"

namespace wsnroute::energy {

void validate(const RadioParams& p) {
  if (!(p.e_elec > 0.0) || !(p.eps_amp > 0.0) || p.packet_bits == 0) {
    throw InvalidArgument("radio parameters must be positive");
  }
  if (!(p.alpha >= 2.0 && p.alpha <= 4.0)) {
    throw InvalidArgument("path-loss exponent must lie in [2, 4]");
  }
}

void validate(const LinkCostParams& p) {
  if (!(p.w_energy >= 0.0) || !(p.w_reserve >= 0.0) || !(p.w_error >= 0.0)) {
    throw InvalidArgument("link cost weights must be non-negative");
  }
  if (p.w_energy == 0.0 && p.w_reserve == 0.0 && p.w_error == 0.0) {
    throw InvalidArgument("at least one link cost weight must be positive");
  }
  if (!(p.error_ref_distance > 0.0) || !std::isfinite(p.error_ref_distance)) {
    throw InvalidArgument("error reference distance must be positive");
  }
}

EnergyState::EnergyState(std::size_t n, double initial_j) : initial_(initial_j) {
  if (!(initial_j > 0.0) || !std::isfinite(initial_j)) {
    throw InvalidArgument("initial battery must be positive and finite");
  }
  residual_.assign(n, initial_j);
}

void EnergyState::set_residual(std::size_t node, double joules) {
  residual_.at(node) = joules < 0.0 ? 0.0 : (joules > initial_ ? initial_ : joules);
}

double tx_energy(const RadioParams& p, std::uint64_t bits, double d) {
  if (!(d >= 0.0)) throw InvalidArgument("transmission distance must be non-negative");
  const auto b = static_cast<double>(bits);
  return p.e_elec * b + p.eps_amp * b * std::pow(d, p.alpha);
}

double rx_energy(const RadioParams& p, std::uint64_t bits) {
  return p.e_elec * static_cast<double>(bits);
}

double link_error(double d, double ref_distance) {
  return -std::expm1(-std::numbers::ln2 * d / ref_distance);
}

double link_cost(const SensorField& field, NodeId i, NodeId j, const EnergyState& state,
                 const RadioParams& rp, const LinkCostParams& lcp) {
  if (i == j) throw InvalidArgument("link endpoints must differ");
  if (i >= field.size() || j >= field.size() || state.size() != field.size()) {
    throw InvalidArgument("node out of range for field/energy state");
  }
  if (!(state.residual(i) > 0.0)) throw DeadNodeError(i);

  const double d = field.distance(i, j);
  const double e_norm = tx_energy(rp, rp.packet_bits, lcp.error_ref_distance);
  const double energy_term = tx_energy(rp, rp.packet_bits, d) / e_norm;
  const double reserve_term = 1.0 - state.residual(j) / state.initial();
  return lcp.w_energy * energy_term + lcp.w_reserve * reserve_term +
         lcp.w_error * link_error(d, lcp.error_ref_distance);
}

double route_cost(const SensorField& field, const Route& route, const EnergyState& state,
                  const RadioParams& rp, const LinkCostParams& lcp) {
  validate_route(field, route);
  const auto& o = route.order;
  double total = 0.0;
  for (std::size_t i = 1; i < o.size(); ++i) total += link_cost(field, o[i - 1], o[i], state, rp, lcp);
  if (route.closed && o.size() > 1) total += link_cost(field, o.back(), o.front(), state, rp, lcp);
  return total;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

ModelConfig parse_model_config(std::string_view text, std::map<std::string, double>* extra) {
  ModelConfig cfg;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, "expected key=value");
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view raw = trim(line.substr(eq + 1));
    std::optional<double> value = parse_finite_double(raw);
    if (!value && (raw == "inf" || raw == "infinity")) value = INFINITY;
    if (!value) throw ParseError(line_no, "bad value for '" + key + "'");
    const double v = *value;
    const bool known = key == "e_elec" || key == "eps_amp" || key == "alpha" ||
                       key == "packet_bits" || key == "w_energy" || key == "w_reserve" ||
                       key == "w_error" || key == "error_ref_distance" ||
                       key == "initial_battery_j";
    if (known && !std::isfinite(v)) throw ParseError(line_no, "'" + key + "' must be finite");

    if (key == "e_elec") cfg.radio.e_elec = v;
    else if (key == "eps_amp") cfg.radio.eps_amp = v;
    else if (key == "alpha") cfg.radio.alpha = v;
    else if (key == "packet_bits") {
      if (v < 1 || v != std::floor(v)) throw ParseError(line_no, "packet_bits must be a positive integer");
      cfg.radio.packet_bits = static_cast<std::uint64_t>(v);
    }
    else if (key == "w_energy") cfg.link.w_energy = v;
    else if (key == "w_reserve") cfg.link.w_reserve = v;
    else if (key == "w_error") cfg.link.w_error = v;
    else if (key == "error_ref_distance") cfg.link.error_ref_distance = v;
    else if (key == "initial_battery_j") cfg.initial_battery_j = v;
    else if (extra) (*extra)[key] = v;
    else throw ParseError(line_no, "unknown key '" + key + "'");
  }
  validate(cfg.radio);
  validate(cfg.link);
  if (!(cfg.initial_battery_j > 0.0)) throw InvalidArgument("initial_battery_j must be positive");
  return cfg;
}

}  // namespace wsnroute::energy
