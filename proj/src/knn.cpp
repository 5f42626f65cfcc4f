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

#include "wsnroute/knn.hpp"

#include <algorithm>
#include <thread>
#include <tuple>

#include "wsnroute/errors.hpp"
#include "wsnroute/numfmt.hpp"

namespace wsnroute::knn {

namespace {

void check_k(std::size_t n, std::size_t k) {
  if (k == 0 || n < 2 || k > n - 1) {
    throw InvalidArgument("k must satisfy 1 <= k <= n-1 (n=" + std::to_string(n) +
                          ", k=" + std::to_string(k) + ")");
  }
}

std::uint32_t farthest_slot(std::span<const NeighborEdge> slots) {
  std::uint32_t best = 0;
  for (std::uint32_t i = 1; i < slots.size(); ++i) {
    const NeighborEdge& e = slots[i];
    const NeighborEdge& b = slots[best];
    if (e.weight > b.weight || (e.weight == b.weight && e.target > b.target)) best = i;
  }
  return best;
}

void run_schedule(const simd::Coords& coords, std::size_t chunk_size,
                  std::span<const ChunkIndex> schedule, KnnState& state) {
  const std::size_t n = coords.size();
  DistanceChunk tile;
  for (const ChunkIndex& ci : schedule) {
    compute_distance_chunk(coords, ci.split, ci.chunk, chunk_size, tile);
    knn_update_chunk(tile, state, n, n);
  }
}

}  // namespace

KnnGraph::KnnGraph(std::size_t n, std::size_t k) : n_(n), k_(k), slots_(n * k) {}

KnnState init_knn_state(std::size_t n, std::size_t k) {
  check_k(n, k);
  return KnnState{KnnGraph(n, k), MaxkState{std::vector<std::uint32_t>(n, 0)}};
}

void compute_distance_chunk(const simd::Coords& coords, std::size_t split, std::size_t chunk,
                            std::size_t chunk_size, DistanceChunk& out) {
  const std::size_t n = coords.size();
  out.split = split;
  out.chunk = chunk;
  out.chunk_size = chunk_size;
  out.values.assign(chunk_size * chunk_size, 0.0);

  const std::size_t col0 = chunk * chunk_size;
  const std::size_t cols = col0 < n ? std::min(chunk_size, n - col0) : 0;
  const auto& kern = simd::kernels(simd::active_isa());
  for (std::size_t r = 0; r < chunk_size; ++r) {
    const std::size_t row = split * chunk_size + r;
    if (row >= n) break;
    kern.distance_row(coords.xs[row], coords.ys[row], coords.xs.data() + col0,
                      coords.ys.data() + col0, out.values.data() + r * chunk_size, cols);
  }
}

void knn_update_chunk(const DistanceChunk& tile, KnnState& state, std::size_t n_rows,
                      std::size_t n_cols) {
  const std::size_t cs = tile.chunk_size;
  for (std::size_t local_row = 0; local_row < cs; ++local_row) {
    const std::size_t row = tile.split * cs + local_row;
    if (row >= n_rows) break;
    auto slots = state.graph.row(row);
    std::uint32_t& maxk = state.maxk.index[row];
    for (std::size_t local_col = 0; local_col < cs; ++local_col) {
      const std::size_t col = tile.chunk * cs + local_col;
      // Diagonal and padding never produce edges.
      if (row == col || col >= n_cols) continue;
      const double d = tile.at(local_row, local_col);
      if (d < slots[maxk].weight) {
        slots[maxk] = NeighborEdge{static_cast<NodeId>(row), static_cast<NodeId>(col), d};
        maxk = farthest_slot(slots);
      }
    }
  }
}

std::vector<ChunkIndex> chunk_schedule(std::size_t n, std::size_t chunk_size) {
  if (chunk_size == 0) throw InvalidArgument("chunk size must be at least 1");
  const std::size_t tiles = (n + chunk_size - 1) / chunk_size;
  std::vector<ChunkIndex> schedule;
  schedule.reserve(tiles * tiles);
  for (std::size_t s = 0; s < tiles; ++s) {
    for (std::size_t c = 0; c < tiles; ++c) schedule.push_back({s, c});
  }
  return schedule;
}

KnnGraph build_knn_graph(const SensorField& field, std::size_t k, std::size_t chunk_size,
                         std::span<const ChunkIndex> schedule) {
  if (chunk_size == 0) throw InvalidArgument("chunk size must be at least 1");
  KnnState state = init_knn_state(field.size(), k);
  const simd::Coords coords(field);
  run_schedule(coords, chunk_size, schedule, state);
  return std::move(state.graph);
}

KnnGraph build_knn_graph(const SensorField& field, std::size_t k, std::size_t chunk_size,
                         const BuildOptions& options) {
  if (chunk_size == 0) throw InvalidArgument("chunk size must be at least 1");
  KnnState state = init_knn_state(field.size(), k);
  const simd::Coords coords(field);
  const std::size_t tiles = (field.size() + chunk_size - 1) / chunk_size;
  const unsigned threads =
      static_cast<unsigned>(std::clamp<std::size_t>(options.threads, 1, tiles));

  // Worker t owns splits t, t+threads, ...; each split's tiles run in
  // ascending chunk order, exactly as in the serial schedule.
  auto work = [&](unsigned t) {
    std::vector<ChunkIndex> mine;
    for (std::size_t s = t; s < tiles; s += threads) {
      for (std::size_t c = 0; c < tiles; ++c) mine.push_back({s, c});
    }
    run_schedule(coords, chunk_size, mine, state);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }
  return std::move(state.graph);
}

KnnGraph brute_force_knn(const SensorField& field, std::size_t k) {
  const std::size_t n = field.size();
  check_k(n, k);
  KnnGraph graph(n, k);
  std::vector<std::pair<double, NodeId>> candidates;
  for (std::size_t r = 0; r < n; ++r) {
    candidates.clear();
    for (std::size_t c = 0; c < n; ++c) {
      if (c != r) candidates.emplace_back(field.distance(r, c), static_cast<NodeId>(c));
    }
    std::partial_sort(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(k),
                      candidates.end());
    auto slots = graph.row(r);
    for (std::size_t i = 0; i < k; ++i) {
      slots[i] = {static_cast<NodeId>(r), candidates[i].second, candidates[i].first};
    }
  }
  return graph;
}

bool maxk_coherent(const KnnState& state) {
  for (std::size_t r = 0; r < state.graph.n(); ++r) {
    auto slots = state.graph.row(r);
    const double held = slots[state.maxk.index[r]].weight;
    for (const NeighborEdge& e : slots) {
      if (e.weight > held) return false;
    }
  }
  return true;
}

std::string dump_graph(const KnnGraph& graph) {
  std::vector<NeighborEdge> edges;
  edges.reserve(graph.n() * graph.k());
  for (std::size_t r = 0; r < graph.n(); ++r) {
    for (const NeighborEdge& e : graph.row(r)) {
      if (e.target != kNoNode) edges.push_back(e);
    }
  }
  std::sort(edges.begin(), edges.end(), [](const NeighborEdge& a, const NeighborEdge& b) {
    return std::tie(a.source, a.weight, a.target) < std::tie(b.source, b.weight, b.target);
  });
  std::string out;
  for (const NeighborEdge& e : edges) {
    out += std::to_string(e.source);
    out += ' ';
    out += std::to_string(e.target);
    out += ' ';
    out += format_shortest(e.weight);
    out += '\n';
  }
  return out;
}

}  // namespace wsnroute::knn
