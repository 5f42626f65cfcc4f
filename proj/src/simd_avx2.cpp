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

#if defined(__x86_64__) || defined(__i386__)
#define WSNROUTE_HAVE_AVX2_KERNELS 1
#include <immintrin.h>
#else
#define WSNROUTE_HAVE_AVX2_KERNELS 0
#endif

namespace wsnroute::simd::avx2 {

#if WSNROUTE_HAVE_AVX2_KERNELS

bool compiled() { return true; }

// Compiled for AVX2 only (no FMA) so that sub/mul/add/sqrt round exactly as
// the scalar reference does.
__attribute__((target("avx2"))) void distance_row(double px, double py, const double* xs,
                                                  const double* ys, double* out,
                                                  std::size_t count) {
  const __m256d vpx = _mm256_set1_pd(px);
  const __m256d vpy = _mm256_set1_pd(py);
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    const __m256d dx = _mm256_sub_pd(vpx, _mm256_loadu_pd(xs + i));
    const __m256d dy = _mm256_sub_pd(vpy, _mm256_loadu_pd(ys + i));
    const __m256d sq = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
    _mm256_storeu_pd(out + i, _mm256_sqrt_pd(sq));
  }
  scalar::distance_row(px, py, xs + i, ys + i, out + i, count - i);
}

__attribute__((target("avx2"))) Nearest nearest_masked(double px, double py, const double* xs,
                                                       const double* ys, const double* mask,
                                                       std::size_t count) {
  const __m256d vpx = _mm256_set1_pd(px);
  const __m256d vpy = _mm256_set1_pd(py);
  const __m256d step = _mm256_set1_pd(4.0);
  __m256d lane_idx = _mm256_setr_pd(0.0, 1.0, 2.0, 3.0);
  __m256d best = _mm256_set1_pd(INFINITY);
  __m256d best_idx = _mm256_set1_pd(static_cast<double>(count));

  // Each lane sees ascending indices, so a strict < keeps the lowest index
  // among equal distances within the lane.
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    const __m256d dx = _mm256_sub_pd(vpx, _mm256_loadu_pd(xs + i));
    const __m256d dy = _mm256_sub_pd(vpy, _mm256_loadu_pd(ys + i));
    const __m256d sq = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
    const __m256d d = _mm256_add_pd(_mm256_sqrt_pd(sq), _mm256_loadu_pd(mask + i));
    const __m256d lt = _mm256_cmp_pd(d, best, _CMP_LT_OQ);
    best = _mm256_blendv_pd(best, d, lt);
    best_idx = _mm256_blendv_pd(best_idx, lane_idx, lt);
    lane_idx = _mm256_add_pd(lane_idx, step);
  }

  alignas(32) double vals[4];
  alignas(32) double idxs[4];
  _mm256_store_pd(vals, best);
  _mm256_store_pd(idxs, best_idx);
  Nearest result{count, INFINITY};
  for (int lane = 0; lane < 4; ++lane) {
    const auto idx = static_cast<std::size_t>(idxs[lane]);
    if (vals[lane] < result.distance ||
        (vals[lane] == result.distance && idx < result.index)) {
      result = {idx, vals[lane]};
    }
  }
  if (result.distance == INFINITY) result.index = count;

  // Tail indices exceed every vector index, so strict < preserves the rule.
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

}  // namespace wsnroute::simd::avx2
