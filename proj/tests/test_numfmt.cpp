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

#include <cstring>

#include "wsnroute/numfmt.hpp"
#include "wsnroute/rng.hpp"

using namespace wsnroute;

TEST_CASE("shortest formatting round-trips") {
  CHECK(format_shortest(14991.0) == "14991");
  CHECK(format_shortest(730231.4981) == "730231.4981");
  Rng rng(7);
  for (int i = 0; i < 2000; ++i) {
    std::uint64_t bits = rng.next_u64();
    double v;
    std::memcpy(&v, &bits, sizeof v);
    if (!std::isfinite(v)) continue;
    auto back = parse_finite_double(format_shortest(v));
    REQUIRE(back);
    CHECK(*back == v);
  }
}

TEST_CASE("minimum significant digits keep the value exact") {
  CHECK(format_min_significant(5.0, 6) == "5.00000");
  CHECK(format_min_significant(800000.0, 6) == "800000");
  CHECK(format_min_significant(0.5, 6) == "0.500000");
  CHECK(format_min_significant(730231.4981, 6) == "730231.4981");
  Rng rng(11);
  for (int i = 0; i < 2000; ++i) {
    const double v = std::ldexp(rng.uniform01(), static_cast<int>(rng.below(120)) - 60);
    const std::string s = format_min_significant(v, 6);
    auto back = parse_finite_double(s);
    REQUIRE(back);
    CHECK(*back == v);
  }
}

TEST_CASE("parse rejects junk and non-finite values") {
  CHECK_FALSE(parse_finite_double(""));
  CHECK_FALSE(parse_finite_double("12x"));
  CHECK_FALSE(parse_finite_double("inf"));
  CHECK_FALSE(parse_finite_double("nan"));
  CHECK(*parse_finite_double("+3.5") == 3.5);
  CHECK(*parse_finite_double("-2e3") == -2000.0);
}
