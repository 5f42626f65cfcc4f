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

#include <atomic>

#include "wsnroute/errors.hpp"
#include "wsnroute/simd.hpp"

namespace wsnroute::simd {

namespace {

constexpr Kernels kScalarKernels{&scalar::distance_row, &scalar::nearest_masked};
constexpr Kernels kAvx2Kernels{&avx2::distance_row, &avx2::nearest_masked};
constexpr Kernels kNeonKernels{&neon::distance_row, &neon::nearest_masked};

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

std::atomic<Isa>& active_slot() {
  static std::atomic<Isa> slot{detected_isa()};
  return slot;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar: return "scalar";
    case Isa::kAvx2: return "avx2";
    case Isa::kNeon: return "neon";
  }
  return "unknown";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::kScalar: return true;
    case Isa::kAvx2: return avx2::compiled() && cpu_has_avx2();
    case Isa::kNeon: return neon::compiled();
  }
  return false;
}

Isa detected_isa() {
  static const Isa detected = [] {
    if (isa_available(Isa::kAvx2)) return Isa::kAvx2;
    if (isa_available(Isa::kNeon)) return Isa::kNeon;
    return Isa::kScalar;
  }();
  return detected;
}

Isa active_isa() { return active_slot().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (!isa_available(isa)) {
    throw InvalidArgument("instruction set '" + std::string(isa_name(isa)) +
                          "' is not available on this machine");
  }
  active_slot().store(isa, std::memory_order_relaxed);
}

const Kernels& kernels(Isa isa) {
  switch (isa) {
    case Isa::kAvx2: return kAvx2Kernels;
    case Isa::kNeon: return kNeonKernels;
    case Isa::kScalar: break;
  }
  return kScalarKernels;
}

Coords::Coords(const SensorField& field) {
  xs.reserve(field.size());
  ys.reserve(field.size());
  for (const Point& p : field.points()) {
    xs.push_back(p.x);
    ys.push_back(p.y);
  }
}

void distance_row(const Point& p, std::span<const double> xs, std::span<const double> ys,
                  std::span<double> out) {
  kernels(active_isa()).distance_row(p.x, p.y, xs.data(), ys.data(), out.data(), out.size());
}

Nearest nearest_masked(const Point& p, std::span<const double> xs, std::span<const double> ys,
                       std::span<const double> mask) {
  return kernels(active_isa()).nearest_masked(p.x, p.y, xs.data(), ys.data(), mask.data(),
                                              mask.size());
}

}  // namespace wsnroute::simd
