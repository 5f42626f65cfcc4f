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

#include <optional>
#include <string>
#include <string_view>

namespace wsnroute {

/// Shortest decimal text that parses back to exactly `v`.
std::string format_shortest(double v);

/// Round-trippable text with at least `min_sig` significant digits.
std::string format_min_significant(double v, int min_sig);

/// Parses the whole of `text` as a finite double; nullopt otherwise.
std::optional<double> parse_finite_double(std::string_view text);

}  // namespace wsnroute
