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

#include <cmath>
#include <limits>

#include "wsnroute/errors.hpp"
#include "wsnroute/numfmt.hpp"
#include "wsnroute/route.hpp"
#include "wsnroute/simd.hpp"

namespace wsnroute {

namespace {

void check_start(const SensorField& field, NodeId start) {
  if (field.empty()) throw InvalidArgument("field has no nodes");
  if (start >= field.size()) {
    throw InvalidArgument("start node " + std::to_string(start) + " out of range (n=" +
                          std::to_string(field.size()) + ")");
  }
}

constexpr double kVisited = std::numeric_limits<double>::infinity();

}  // namespace

void validate_route(const SensorField& field, const Route& route) {
  const std::size_t n = field.size();
  if (n == 0) throw InvalidArgument("field has no nodes");
  if (route.order.size() != n) {
    throw InvalidArgument("route visits " + std::to_string(route.order.size()) +
                          " nodes, field has " + std::to_string(n));
  }
  std::vector<bool> seen(n, false);
  for (NodeId id : route.order) {
    if (id >= n || seen[id]) {
      throw InvalidArgument("route is not a permutation (node " + std::to_string(id) + ")");
    }
    seen[id] = true;
  }
}

double route_length(const SensorField& field, const Route& route) {
  validate_route(field, route);
  const auto& order = route.order;
  double total = 0.0;
  for (std::size_t i = 1; i < order.size(); ++i) total += field.distance(order[i - 1], order[i]);
  if (route.closed && order.size() > 1) total += field.distance(order.back(), order.front());
  return total;
}

Route nn_route(const SensorField& field, NodeId start) {
  check_start(field, start);
  const std::size_t n = field.size();
  const simd::Coords coords(field);
  const auto& kern = simd::kernels(simd::active_isa());

  // mask[i] is +inf once node i is visited; the kernel skips those entries.
  std::vector<double> mask(n, 0.0);
  Route route;
  route.order.reserve(n);
  NodeId current = start;
  route.order.push_back(current);
  mask[current] = kVisited;
  for (std::size_t step = 1; step < n; ++step) {
    const simd::Nearest next = kern.nearest_masked(coords.xs[current], coords.ys[current],
                                                   coords.xs.data(), coords.ys.data(),
                                                   mask.data(), n);
    current = static_cast<NodeId>(next.index);
    route.order.push_back(current);
    mask[current] = kVisited;
  }
  return route;
}

Route nn_route_accelerated(const SensorField& field, const knn::KnnGraph& graph, NodeId start,
                           AcceleratedStats* stats) {
  check_start(field, start);
  const std::size_t n = field.size();
  if (graph.n() != n) {
    throw InvalidArgument("graph has " + std::to_string(graph.n()) + " rows, field has " +
                          std::to_string(n) + " nodes");
  }
  const simd::Coords coords(field);
  const auto& kern = simd::kernels(simd::active_isa());

  std::vector<double> mask(n, 0.0);
  Route route;
  route.order.reserve(n);
  NodeId current = start;
  route.order.push_back(current);
  mask[current] = kVisited;
  std::size_t fallbacks = 0;
  for (std::size_t step = 1; step < n; ++step) {
    // The slots hold the k nearest nodes under the (distance, index) order,
    // so the best unvisited slot is the global nearest unvisited node.
    NodeId best = knn::kNoNode;
    double best_d = kVisited;
    for (const knn::NeighborEdge& e : graph.row(current)) {
      if (e.target == knn::kNoNode || mask[e.target] != 0.0) continue;
      if (e.weight < best_d || (e.weight == best_d && e.target < best)) {
        best = e.target;
        best_d = e.weight;
      }
    }
    if (best == knn::kNoNode) {
      ++fallbacks;
      best = static_cast<NodeId>(kern.nearest_masked(coords.xs[current], coords.ys[current],
                                                     coords.xs.data(), coords.ys.data(),
                                                     mask.data(), n)
                                     .index);
    }
    current = best;
    route.order.push_back(current);
    mask[current] = kVisited;
  }
  if (stats) stats->fallbacks = fallbacks;
  return route;
}

std::string write_route(const Route& route) {
  std::string out;
  for (NodeId id : route.order) {
    out += std::to_string(id);
    out += '\n';
  }
  return out;
}

Route parse_route(std::string_view text) {
  Route route;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    while (!line.empty() && line.front() == ' ') line.remove_prefix(1);
    if (line.empty()) continue;
    auto v = parse_finite_double(line);
    if (!v || *v < 0 || *v != std::floor(*v) || *v >= knn::kNoNode) {
      throw ParseError(line_no, "bad node id \"" + std::string(line) + "\"");
    }
    route.order.push_back(static_cast<NodeId>(*v));
  }
  return route;
}

std::string export_route_plot(const SensorField& field, const Route& route) {
  validate_route(field, route);
  std::string out;
  auto emit = [&](NodeId id) {
    out += format_shortest(field[id].x);
    out += ' ';
    out += format_shortest(field[id].y);
    out += '\n';
  };
  for (NodeId id : route.order) emit(id);
  if (route.closed && route.order.size() > 1) emit(route.order.front());
  return out;
}

}  // namespace wsnroute
