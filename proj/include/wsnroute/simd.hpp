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
#include <span>
#include <string_view>
#include <vector>

#include "wsnroute/field.hpp"

namespace wsnroute::simd {

enum class Isa { kScalar, kAvx2, kNeon };

std::string_view isa_name(Isa isa);

/// Whether the running CPU (and this build) can execute `isa`.
bool isa_available(Isa isa);

/// Best available ISA, detected once.
Isa detected_isa();

/// ISA used by the dispatching entry points below. Defaults to
/// detected_isa(); tests pin it to compare variants.
Isa active_isa();
void set_active_isa(Isa isa);

/// Structure-of-arrays copy of field coordinates for the vector kernels.
struct Coords {
  std::vector<double> xs;
  std::vector<double> ys;

  explicit Coords(const SensorField& field);
  std::size_t size() const noexcept { return xs.size(); }
};

struct Nearest {
  std::size_t index;
  double distance;
};

// Kernel table. Every variant must produce results bit-identical to the
// scalar reference:
//   distance_row:  out[i] = sqrt((px - xs[i])^2 + (py - ys[i])^2)
//   nearest_masked: argmin over i of distance(i) + mask[i], where mask[i] is
//                   0 (eligible) or +inf (excluded); the lowest index wins
//                   among equal distances. Returns index == count when no
//                   entry is eligible.
struct Kernels {
  void (*distance_row)(double px, double py, const double* xs, const double* ys, double* out,
                       std::size_t count);
  Nearest (*nearest_masked)(double px, double py, const double* xs, const double* ys,
                            const double* mask, std::size_t count);
};

const Kernels& kernels(Isa isa);

namespace scalar {
void distance_row(double px, double py, const double* xs, const double* ys, double* out,
                  std::size_t count);
Nearest nearest_masked(double px, double py, const double* xs, const double* ys,
                       const double* mask, std::size_t count);
}  // namespace scalar

namespace avx2 {
bool compiled();
void distance_row(double px, double py, const double* xs, const double* ys, double* out,
                  std::size_t count);
Nearest nearest_masked(double px, double py, const double* xs, const double* ys,
                       const double* mask, std::size_t count);
}  // namespace avx2

namespace neon {
bool compiled();
void distance_row(double px, double py, const double* xs, const double* ys, double* out,
                  std::size_t count);
Nearest nearest_masked(double px, double py, const double* xs, const double* ys,
                       const double* mask, std::size_t count);
}  // namespace neon

// Dispatching wrappers over kernels(active_isa()).
void distance_row(const Point& p, std::span<const double> xs, std::span<const double> ys,
                  std::span<double> out);
Nearest nearest_masked(const Point& p, std::span<const double> xs, std::span<const double> ys,
                       std::span<const double> mask);

}  // namespace wsnroute::simd
