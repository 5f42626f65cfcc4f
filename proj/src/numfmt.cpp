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

#include "wsnroute/numfmt.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <system_error>

namespace wsnroute {

namespace {

int significant_digits(std::string_view s) {
  int count = 0;
  bool leading = true;
  for (char c : s) {
    if (c == 'e' || c == 'E') break;
    if (c < '0' || c > '9') continue;
    if (leading && c == '0') continue;
    leading = false;
    ++count;
  }
  return count;
}

}  // namespace

std::string format_shortest(double v) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  (void)ec;
  return std::string(buf.data(), end);
}

std::string format_min_significant(double v, int min_sig) {
  std::string s = format_shortest(v);
  if (!std::isfinite(v) || v == 0.0 || significant_digits(s) >= min_sig) return s;

  // Longer correctly rounded output still parses back to the same value.
  std::array<char, 128> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                 std::chars_format::scientific, min_sig - 1);
  (void)ec;
  std::string sci(buf.data(), end);
  const int exponent = static_cast<int>(std::floor(std::log10(std::fabs(v))));
  if (exponent < -5 || exponent >= 15) return sci;
  int decimals = min_sig - 1 - exponent;
  if (decimals < 0) decimals = 0;
  auto [end2, ec2] = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                   std::chars_format::fixed, decimals);
  (void)ec2;
  return std::string(buf.data(), end2);
}

std::optional<double> parse_finite_double(std::string_view text) {
  if (text.empty()) return std::nullopt;
  // from_chars rejects a leading '+', which hand-edited files may contain.
  if (text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v)) {
    return std::nullopt;
  }
  return v;
}

}  // namespace wsnroute
