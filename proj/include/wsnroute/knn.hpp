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
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "wsnroute/field.hpp"
#include "wsnroute/simd.hpp"

namespace wsnroute::knn {

inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

struct NeighborEdge {
  NodeId source = kNoNode;
  NodeId target = kNoNode;
  double weight = std::numeric_limits<double>::infinity();
};

/// n rows of exactly k neighbor slots, stored row-major.
class KnnGraph {
 public:
  KnnGraph(std::size_t n, std::size_t k);

  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return k_; }

  std::span<const NeighborEdge> row(std::size_t r) const {
    return {slots_.data() + r * k_, k_};
  }
  std::span<NeighborEdge> row(std::size_t r) { return {slots_.data() + r * k_, k_}; }

 private:
  std::size_t n_;
  std::size_t k_;
  std::vector<NeighborEdge> slots_;
};

/// Per-row index of the slot holding the row's largest weight.
struct MaxkState {
  std::vector<std::uint32_t> index;
};

struct KnnState {
  KnnGraph graph;
  MaxkState maxk;
};

/// chunk_size x chunk_size tile of the pairwise distance matrix at tile
/// coordinates (split, chunk). Entries whose absolute row or column is
/// outside the matrix are padding and carry arbitrary values.
struct DistanceChunk {
  std::size_t split = 0;
  std::size_t chunk = 0;
  std::size_t chunk_size = 0;
  std::vector<double> values;

  double at(std::size_t local_row, std::size_t local_col) const {
    return values[local_row * chunk_size + local_col];
  }
};

struct ChunkIndex {
  std::size_t split;
  std::size_t chunk;
};

/// All weights +inf, all endpoints kNoNode, Maxk zeroed.
/// Requires 1 <= k <= n-1.
KnnState init_knn_state(std::size_t n, std::size_t k);

/// Fills `out` with the tile (split, chunk) of the distance matrix over
/// `coords`. Padding entries are set to 0 so that a kernel which failed to
/// exclude them would visibly corrupt the graph.
void compute_distance_chunk(const simd::Coords& coords, std::size_t split, std::size_t chunk,
                            std::size_t chunk_size, DistanceChunk& out);

/// Chunked kNN kernel. For each local row of the tile, scans local columns in
/// ascending order, skips the diagonal and padding, and when a distance is
/// strictly smaller than the row's current farthest slot, overwrites that
/// slot and searches the row for its new farthest slot.
///
/// Among slots of equal maximal weight the one with the largest target is
/// treated as farthest, so eviction always removes the latest-scanned
/// candidate of a tie.
void knn_update_chunk(const DistanceChunk& tile, KnnState& state, std::size_t n_rows,
                      std::size_t n_cols);

/// Row-major enumeration of every (split, chunk) tile covering an n x n matrix.
std::vector<ChunkIndex> chunk_schedule(std::size_t n, std::size_t chunk_size);

struct BuildOptions {
  /// Worker threads; tiles are partitioned by split so rows never race.
  unsigned threads = 1;
};

/// Runs the kernel over every tile of the field's distance matrix.
KnnGraph build_knn_graph(const SensorField& field, std::size_t k, std::size_t chunk_size,
                         const BuildOptions& options = {});

/// Single-threaded build visiting tiles in the given order.
KnnGraph build_knn_graph(const SensorField& field, std::size_t k, std::size_t chunk_size,
                         std::span<const ChunkIndex> schedule);

/// Sorts every candidate by (distance, target) and keeps the first k.
KnnGraph brute_force_knn(const SensorField& field, std::size_t k);

/// True when every row's Maxk slot holds that row's maximum weight.
bool maxk_coherent(const KnnState& state);

/// `source target weight` lines sorted by (source, weight, target).
std::string dump_graph(const KnnGraph& graph);

}  // namespace wsnroute::knn
