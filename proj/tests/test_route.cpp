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
#include <cmath>
#include <set>

#include "oracles.hpp"
#include "wsnroute/errors.hpp"
#include "wsnroute/knn.hpp"
#include "wsnroute/route.hpp"
#include "wsnroute/rng.hpp"

using namespace wsnroute;

namespace {

std::vector<Point> to_vec(const SensorField& f) { return {f.points().begin(), f.points().end()}; }

}  // namespace

TEST_CASE("nn_route: collinear instance") {
  const SensorField f({{0, 0}, {1, 0}, {3, 0}}, 3, 1);
  const Route r = nn_route(f, 0);
  CHECK(r.order == std::vector<NodeId>{0, 1, 2});
  CHECK_FALSE(r.closed);
  CHECK(route_length(f, r) == 3.0);
  CHECK(route_length(f, Route{r.order, true}) == 6.0);
  CHECK(nn_route(f, 2).order == std::vector<NodeId>{2, 1, 0});
}

TEST_CASE("nn_route: single node and errors") {
  const SensorField one({{5, 5}}, 5, 5);
  CHECK(nn_route(one, 0).order == std::vector<NodeId>{0});
  CHECK(route_length(one, nn_route(one, 0)) == 0.0);
  CHECK(route_length(one, Route{{0}, true}) == 0.0);
  CHECK_THROWS_AS(nn_route(one, 1), InvalidArgument);
}

TEST_CASE("nn_route: ties go to the lowest index") {
  const SensorField f({{0, 0}, {1, 0}, {-1, 0}, {0, 1}}, 1, 1);
  CHECK(nn_route(f, 0).order[1] == 1);
}

TEST_CASE("route_length: permutation checks and reversal invariance") {
  const SensorField f = generate_uniform(30, 100, 100, 4);
  CHECK_THROWS_AS(route_length(f, Route{{0, 1}, false}), InvalidArgument);
  std::vector<NodeId> dup(30, 0);
  CHECK_THROWS_AS(route_length(f, Route{dup, false}), InvalidArgument);

  Route r = nn_route(f, 3);
  Route rev = r;
  std::reverse(rev.order.begin(), rev.order.end());
  CHECK(route_length(f, rev) == doctest::Approx(route_length(f, r)).epsilon(1e-12));
  CHECK(route_length(f, r) == doctest::Approx(oracle::open_length(to_vec(f), r.order)).epsilon(1e-12));
}

TEST_CASE("nn_route: every step picks a nearest unvisited node") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const SensorField f = generate_uniform(80, 1000, 1000, seed);
    const NodeId start = static_cast<NodeId>(seed % 80);
    const Route r = nn_route(f, start);
    validate_route(f, r);
    REQUIRE(r.order.front() == start);
    std::vector<bool> visited(80, false);
    visited[start] = true;
    for (std::size_t s = 1; s < r.order.size(); ++s) {
      const NodeId cur = r.order[s - 1];
      const double chosen = oracle::dist(f[cur], f[r.order[s]]);
      for (NodeId v = 0; v < 80; ++v) {
        if (!visited[v]) REQUIRE(chosen <= oracle::dist(f[cur], f[v]) + 1e-9);
      }
      visited[r.order[s]] = true;
    }
  }
}

TEST_CASE("nn_route: never shorter than the exhaustive optimum") {
  Rng rng(77);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 2 + rng.below(8);
    const SensorField f = generate_uniform(n, 100, 100, rng.next_u64());
    const NodeId start = static_cast<NodeId>(rng.below(n));
    const double opt = oracle::optimal_open_length(to_vec(f), static_cast<int>(start));
    CHECK(route_length(f, nn_route(f, start)) >= opt - 1e-9);
  }
}

TEST_CASE("nn_route_accelerated matches nn_route") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const SensorField f = generate_uniform(200, 20000, 20000, seed);
    const knn::KnnGraph g = knn::build_knn_graph(f, 5, 64);
    const NodeId start = static_cast<NodeId>(seed * 7 % 200);
    AcceleratedStats stats;
    REQUIRE(nn_route_accelerated(f, g, start, &stats) == nn_route(f, start));
    CHECK(stats.fallbacks < 200);
  }

  const SensorField f = generate_uniform(40, 10, 10, 9);
  AcceleratedStats stats;
  const knn::KnnGraph full = knn::build_knn_graph(f, 39, 16);
  CHECK(nn_route_accelerated(f, full, 0, &stats) == nn_route(f, 0));
  CHECK(stats.fallbacks == 0);

  const knn::KnnGraph wrong = knn::build_knn_graph(generate_uniform(10, 1, 1, 1), 3, 4);
  CHECK_THROWS_AS(nn_route_accelerated(f, wrong, 0), InvalidArgument);
}

TEST_CASE("route text round trip and plot export") {
  const SensorField f({{0, 0}, {1.5, 0}, {3, 2}}, 3, 2);
  const Route r{{2, 0, 1}, false};
  CHECK(write_route(r) == "2\n0\n1\n");
  CHECK(parse_route("2\r\n0\n\n1") == r);
  CHECK_THROWS_AS(parse_route("0\n-1\n"), ParseError);
  CHECK_THROWS_AS(parse_route("0\n1.5\n"), ParseError);
  CHECK(export_route_plot(f, r) == "3 2\n0 0\n1.5 0\n");
  CHECK(export_route_plot(f, Route{r.order, true}) == "3 2\n0 0\n1.5 0\n3 2\n");
}
