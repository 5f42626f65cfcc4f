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

#if defined(__aarch64__)
#define WSNROUTE_HAVE_NEON_KERNELS 1
#include <arm_neon.h>
#else
#define WSNROUTE_HAVE_NEON_KERNELS 0
#endif

namespace wsnroute::simd::neon {

#if WSNROUTE_HAVE_NEON_KERNELS

bool compiled() { return true; }

void distance_row(double px, double py, const double* xs, const double* ys, double* out,
                  std::size_t count) {
  const float64x2_t vpx = vdupq_n_f64(px);
  const float64x2_t vpy = vdupq_n_f64(py);
  std::size_t i = 0;
  for (; i + 2 <= count; i += 2) {
    const float64x2_t dx = vsubq_f64(vpx, vld1q_f64(xs + i));
    const float64x2_t dy = vsubq_f64(vpy, vld1q_f64(ys + i));
    const float64x2_t sq = vaddq_f64(vmulq_f64(dx, dx), vmulq_f64(dy, dy));
    vst1q_f64(out + i, vsqrtq_f64(sq));
  }
  scalar::distance_row(px, py, xs + i, ys + i, out + i, count - i);
}

Nearest nearest_masked(double px, double py, const double* xs, const double* ys,
                       const double* mask, std::size_t count) {
  const float64x2_t vpx = vdupq_n_f64(px);
  const float64x2_t vpy = vdupq_n_f64(py);
  const float64x2_t step = vdupq_n_f64(2.0);
  const double init_idx[2] = {0.0, 1.0};
  float64x2_t lane_idx = vld1q_f64(init_idx);
  float64x2_t best = vdupq_n_f64(INFINITY);
  float64x2_t best_idx = vdupq_n_f64(static_cast<double>(count));

  std::size_t i = 0;
  for (; i + 2 <= count; i += 2) {
    const float64x2_t dx = vsubq_f64(vpx, vld1q_f64(xs + i));
    const float64x2_t dy = vsubq_f64(vpy, vld1q_f64(ys + i));
    const float64x2_t sq = vaddq_f64(vmulq_f64(dx, dx), vmulq_f64(dy, dy));
    const float64x2_t d = vaddq_f64(vsqrtq_f64(sq), vld1q_f64(mask + i));
    const uint64x2_t lt = vcltq_f64(d, best);
    best = vbslq_f64(lt, d, best);
    best_idx = vbslq_f64(lt, lane_idx, best_idx);
    lane_idx = vaddq_f64(lane_idx, step);
  }

  double vals[2];
  double idxs[2];
  vst1q_f64(vals, best);
  vst1q_f64(idxs, best_idx);
  Nearest result{count, INFINITY};
  for (int lane = 0; lane < 2; ++lane) {
    const auto idx = static_cast<std::size_t>(idxs[lane]);
    if (vals[lane] < result.distance ||
        (vals[lane] == result.distance && idx < result.index)) {
      result = {idx, vals[lane]};
    }
  }
  if (result.distance == INFINITY) result.index = count;

  for (; i < count; ++i) {
    const double dx = px - xs[i];
    const double dy = py - ys[i];
    const double d = std::sqrt(dx * dx + dy * dy) + mask[i];
    if (d < result.distance) result = {i, d};
  }
  return result;
}

#else

bool compiled() { return false; }

void distance_row(double px, double py, const double* xs, const double* ys, double* out,
                  std::size_t count) {
  scalar::distance_row(px, py, xs, ys, out, count);
}

Nearest nearest_masked(double px, double py, const double* xs, const double* ys,
                       const double* mask, std::size_t count) {
  return scalar::nearest_masked(px, py, xs, ys, mask, count);
}

#endif

}  // namespace wsnroute::simd::neon
