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
#include <string>
#include <string_view>
#include <vector>

#include "wsnroute/field.hpp"
#include "wsnroute/knn.hpp"

namespace wsnroute {

/// Visiting order over every node of a field. Open path unless `closed`.
struct Route {
  std::vector<NodeId> order;
  bool closed = false;

  friend bool operator==(const Route&, const Route&) = default;
};

/// Throws InvalidArgument unless route.order is a permutation of 0..n-1.
void validate_route(const SensorField& field, const Route& route);

/// Sum of consecutive-pair distances, plus the closing edge when closed.
double route_length(const SensorField& field, const Route& route);

/// Greedy nearest-neighbor route from `start`: repeatedly moves to the
/// nearest unvisited node, lowest index among equals.
Route nn_route(const SensorField& field, NodeId start = 0);

struct AcceleratedStats {
  /// Steps where every kNN slot was already visited and a full scan ran.
  std::size_t fallbacks = 0;
};

/// Same route as nn_route, consulting the current node's kNN slots before
/// falling back to a full scan.
Route nn_route_accelerated(const SensorField& field, const knn::KnnGraph& graph,
                           NodeId start = 0, AcceleratedStats* stats = nullptr);

/// One NodeId per line.
std::string write_route(const Route& route);
Route parse_route(std::string_view text);

/// `x y` per line in visit order; the start node is repeated at the end of
/// closed routes.
std::string export_route_plot(const SensorField& field, const Route& route);

}  // namespace wsnroute
