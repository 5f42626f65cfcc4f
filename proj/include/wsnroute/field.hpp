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

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wsnroute {

/// Node identity is the positional index of a point in its field.
using NodeId = std::uint32_t;

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

/// Euclidean distance, sqrt(dx*dx + dy*dy). Every kernel in the library
/// reproduces this expression bit for bit.
inline double distance(const Point& p, const Point& q) {
  const double dx = p.x - q.x;
  const double dy = p.y - q.y;
  return std::sqrt(dx * dx + dy * dy);
}

// Immutable set of sensor positions. Generated fields keep their seed;
// parsed datasets report their bounding box anchored at the origin.
class SensorField {
 public:
  SensorField(std::vector<Point> points, double width, double height,
              std::optional<std::uint64_t> seed = std::nullopt);

  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  std::span<const Point> points() const noexcept { return points_; }
  const Point& operator[](NodeId id) const { return points_[id]; }
  double width() const noexcept { return width_; }
  double height() const noexcept { return height_; }
  std::optional<std::uint64_t> seed() const noexcept { return seed_; }

  double distance(NodeId a, NodeId b) const {
    return wsnroute::distance(points_[a], points_[b]);
  }

 private:
  std::vector<Point> points_;
  double width_;
  double height_;
  std::optional<std::uint64_t> seed_;
};

/// Default side length of generated fields.
inline constexpr double kDefaultFieldSide = 20000.0;

/// n points i.i.d. uniform over [0,width]x[0,height]. Same arguments always
/// produce the same point sequence.
SensorField generate_uniform(std::size_t n, double width, double height, std::uint64_t seed);

/// Reads `P (<x> <y>)` records, one per non-blank line. CRLF and extra
/// whitespace are accepted. Throws ParseError or EmptyDatasetError.
SensorField parse_dataset(std::string_view text);
SensorField read_dataset(std::istream& in);
SensorField load_dataset(const std::string& path);

/// LF-terminated `P (<x> <y>)` records using shortest round-trip decimals.
std::string write_dataset(const SensorField& field);
void save_dataset(const SensorField& field, const std::string& path);

}  // namespace wsnroute
