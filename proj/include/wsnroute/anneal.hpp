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
#include <functional>
#include <optional>

#include "wsnroute/field.hpp"
#include "wsnroute/route.hpp"

namespace wsnroute {

enum class MoveKind {
  kSwap,           ///< exchange two positions
  kTwoOptReverse,  ///< reverse the segment between two positions
};

struct AnnealSchedule {
  double initial_temp = 1.0;
  double cooling_factor = 0.95;
  std::size_t iters_per_temp = 1;
  double min_temp = 1e-3;
  std::size_t max_iters = 0;
  MoveKind move_kind = MoveKind::kTwoOptReverse;
};

/// Throws InvalidArgument when the schedule breaks its invariants.
void validate_schedule(const AnnealSchedule& schedule);

/// Textbook defaults scaled to the instance: T0 is half the mean edge length
/// of `initial`, cooling 0.95, 20*n iterations per temperature, stop at
/// 1e-3*T0. max_iters is unbounded so the temperature floor ends the run.
AnnealSchedule default_schedule(const SensorField& field, const Route& initial);

/// Iteration cap per node of the paper-budget preset. Under the default
/// schedule the run stops about 80 cooling steps in (T near 0.017*T0), while
/// the route is still roughly 1.5x the nearest-neighbor length at n = 2000.
inline constexpr std::size_t kPaperBudgetItersPerNode = 1600;

/// default_schedule capped at kPaperBudgetItersPerNode*n iterations; the
/// under-converged regime of the published NN vs SA comparison.
AnnealSchedule paper_budget_schedule(const SensorField& field, const Route& initial);

/// Uniformly random open route drawn from `seed`.
Route random_route(std::size_t n, std::uint64_t seed);

/// Called after every iteration with (iteration, current length, best length).
using AnnealObserver = std::function<void(std::size_t, double, double)>;

/// Simulated annealing over open routes; returns the best route seen, so
/// the result is never longer than `initial`. Deterministic in all inputs.
Route sa_route(const SensorField& field, const Route& initial, const AnnealSchedule& schedule,
               std::uint64_t seed, const AnnealObserver& observer = {});

inline constexpr std::size_t kMaxExhaustiveNodes = 10;

/// Exact minimum-length open path by enumeration, fixing `start` when
/// given. Ties go to the lexicographically smallest order. Refuses n > 10.
Route brute_force_optimal(const SensorField& field, std::optional<NodeId> start = std::nullopt);

}  // namespace wsnroute
