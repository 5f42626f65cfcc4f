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

#include "wsnroute/simd.hpp"

namespace wsnroute::simd::scalar {

void distance_row(double px, double py, const double* xs, const double* ys, double* out,
                  std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    const double dx = px - xs[i];
    const double dy = py - ys[i];
    out[i] = std::sqrt(dx * dx + dy * dy);
  }
}

Nearest nearest_masked(double px, double py, const double* xs, const double* ys,
                       const double* mask, std::size_t count) {
  Nearest best{count, INFINITY};
  for (std::size_t i = 0; i < count; ++i) {
    const double dx = px - xs[i];
    const double dy = py - ys[i];
    const double d = std::sqrt(dx * dx + dy * dy) + mask[i];
    if (d < best.distance) best = {i, d};
  }
  return best;
}

}  // namespace wsnroute::simd::scalar
