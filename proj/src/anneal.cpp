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

#include "wsnroute/anneal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "wsnroute/errors.hpp"
#include "wsnroute/rng.hpp"

namespace wsnroute {

namespace {

double mean_edge(const SensorField& field, const Route& route) {
  if (route.order.size() < 2) return 0.0;
  Route open = route;
  open.closed = false;
  return route_length(field, open) / static_cast<double>(route.order.size() - 1);
}

// Change in open-path length if positions i < j were reversed.
double reverse_delta(const SensorField& field, const std::vector<NodeId>& o, std::size_t i,
                     std::size_t j) {
  const std::size_t n = o.size();
  double before = 0.0;
  double after = 0.0;
  if (i > 0) {
    before += field.distance(o[i - 1], o[i]);
    after += field.distance(o[i - 1], o[j]);
  }
  if (j + 1 < n) {
    before += field.distance(o[j], o[j + 1]);
    after += field.distance(o[i], o[j + 1]);
  }
  return after - before;
}

// Sum of the edges starting at the (deduplicated) positions around i and j.
double local_edges(const SensorField& field, const std::vector<NodeId>& o, std::size_t i,
                   std::size_t j) {
  const std::size_t last = o.size() - 1;
  std::size_t starts[4];
  std::size_t count = 0;
  auto add = [&](std::size_t p) {
    if (p >= last) return;
    for (std::size_t q = 0; q < count; ++q) {
      if (starts[q] == p) return;
    }
    starts[count++] = p;
  };
  if (i > 0) add(i - 1);
  add(i);
  if (j > 0) add(j - 1);
  add(j);
  double sum = 0.0;
  for (std::size_t q = 0; q < count; ++q) sum += field.distance(o[starts[q]], o[starts[q] + 1]);
  return sum;
}

}  // namespace

void validate_schedule(const AnnealSchedule& s) {
  if (!(s.initial_temp > 0.0) || !std::isfinite(s.initial_temp)) {
    throw InvalidArgument("initial temperature must be positive and finite");
  }
  if (!(s.cooling_factor > 0.0 && s.cooling_factor < 1.0)) {
    throw InvalidArgument("cooling factor must lie strictly between 0 and 1");
  }
  if (!(s.min_temp > 0.0)) throw InvalidArgument("minimum temperature must be positive");
  if (s.iters_per_temp == 0) throw InvalidArgument("iterations per temperature must be >= 1");
}

AnnealSchedule default_schedule(const SensorField& field, const Route& initial) {
  AnnealSchedule s;
  const double edge = mean_edge(field, initial);
  s.initial_temp = edge > 0.0 ? 0.5 * edge : 1.0;
  s.cooling_factor = 0.95;
  s.iters_per_temp = std::max<std::size_t>(1, 20 * field.size());
  s.min_temp = 1e-3 * s.initial_temp;
  s.max_iters = std::numeric_limits<std::size_t>::max();
  s.move_kind = MoveKind::kTwoOptReverse;
  return s;
}

AnnealSchedule paper_budget_schedule(const SensorField& field, const Route& initial) {
  AnnealSchedule s = default_schedule(field, initial);
  s.max_iters = kPaperBudgetItersPerNode * field.size();
  return s;
}

Route random_route(std::size_t n, std::uint64_t seed) {
  Route r;
  r.order.resize(n);
  std::iota(r.order.begin(), r.order.end(), NodeId{0});
  Rng rng(seed);
  // Fisher-Yates with the portable bounded draw.
  for (std::size_t i = n; i > 1; --i) {
    std::swap(r.order[i - 1], r.order[rng.below(i)]);
  }
  return r;
}

Route sa_route(const SensorField& field, const Route& initial, const AnnealSchedule& schedule,
               std::uint64_t seed, const AnnealObserver& observer) {
  validate_schedule(schedule);
  validate_route(field, initial);
  if (initial.closed) throw InvalidArgument("annealing optimizes open routes only");
  const std::size_t n = initial.order.size();
  if (n < 2 || schedule.max_iters == 0) return initial;

  Rng rng(seed);
  std::vector<NodeId> current = initial.order;
  std::vector<NodeId> best = current;
  Route open{current, false};
  const double initial_len = route_length(field, open);
  double current_len = initial_len;
  double best_len = initial_len;

  double temp = schedule.initial_temp;
  std::size_t at_temp = 0;
  for (std::size_t iter = 0; iter < schedule.max_iters && temp >= schedule.min_temp; ++iter) {
    std::size_t i = rng.below(n);
    std::size_t j = rng.below(n - 1);
    if (j >= i) ++j;
    if (i > j) std::swap(i, j);

    double delta;
    if (schedule.move_kind == MoveKind::kTwoOptReverse) {
      delta = reverse_delta(field, current, i, j);
    } else {
      const double before = local_edges(field, current, i, j);
      std::swap(current[i], current[j]);
      delta = local_edges(field, current, i, j) - before;
    }

    const bool accept = delta <= 0.0 || rng.uniform01() < std::exp(-delta / temp);
    if (schedule.move_kind == MoveKind::kTwoOptReverse) {
      if (accept) {
        std::reverse(current.begin() + static_cast<std::ptrdiff_t>(i),
                     current.begin() + static_cast<std::ptrdiff_t>(j) + 1);
      }
    } else if (!accept) {
      std::swap(current[i], current[j]);
    }
    if (accept) {
      current_len += delta;
      if (current_len < best_len) {
        best_len = current_len;
        best = current;
      }
    }
    if (observer) observer(iter, current_len, best_len);

    if (++at_temp == schedule.iters_per_temp) {
      at_temp = 0;
      temp *= schedule.cooling_factor;
    }
  }

  // Incremental lengths drift by rounding; confirm elitism on exact sums.
  Route result{std::move(best), false};
  if (route_length(field, result) > initial_len) return initial;
  return result;
}

Route brute_force_optimal(const SensorField& field, std::optional<NodeId> start) {
  const std::size_t n = field.size();
  if (n == 0) throw InvalidArgument("field has no nodes");
  if (n > kMaxExhaustiveNodes) {
    throw SizeError("exhaustive search limited to " + std::to_string(kMaxExhaustiveNodes) +
                    " nodes, field has " + std::to_string(n));
  }
  if (start && *start >= n) throw InvalidArgument("start node out of range");

  std::vector<double> dist(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) dist[a * n + b] = field.distance(a, b);
  }

  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});
  auto first = order.begin();
  if (start) {
    std::rotate(order.begin(), order.begin() + *start, order.begin() + *start + 1);
    ++first;
  }

  std::vector<NodeId> best = order;
  double best_len = std::numeric_limits<double>::infinity();
  do {
    double len = 0.0;
    for (std::size_t i = 1; i < n; ++i) len += dist[order[i - 1] * n + order[i]];
    if (len < best_len) {
      best_len = len;
      best = order;
    }
  } while (std::next_permutation(first, order.end()));
  return Route{std::move(best), false};
}

}  // namespace wsnroute
