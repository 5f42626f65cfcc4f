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

#include "wsnroute/field.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iterator>
#include <sstream>

#include "wsnroute/errors.hpp"
#include "wsnroute/numfmt.hpp"
#include "wsnroute/rng.hpp"

namespace wsnroute {

SensorField::SensorField(std::vector<Point> points, double width, double height,
                         std::optional<std::uint64_t> seed)
    : points_(std::move(points)), width_(width), height_(height), seed_(seed) {
  for (const Point& p : points_) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw InvalidArgument("point coordinates must be finite");
    }
  }
}

SensorField generate_uniform(std::size_t n, double width, double height, std::uint64_t seed) {
  if (n == 0) throw InvalidArgument("node count must be at least 1");
  if (!(width > 0.0) || !(height > 0.0) || !std::isfinite(width) || !std::isfinite(height)) {
    throw InvalidArgument("field dimensions must be positive and finite");
  }
  Rng rng(seed);
  std::vector<Point> points(n);
  for (Point& p : points) {
    p.x = rng.uniform(0.0, width);
    p.y = rng.uniform(0.0, height);
  }
  return SensorField(std::move(points), width, height, seed);
}

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

// One record: `P (<x> <y>)`, whitespace-tolerant.
Point parse_record(std::string_view line, std::size_t line_no) {
  auto fail = [&](const char* why) -> Point {
    throw ParseError(line_no, std::string(why) + " in \"" + std::string(line) + "\"");
  };
  std::string_view s = trim(line);
  if (s.empty() || s.front() != 'P') return fail("expected 'P'");
  s = trim(s.substr(1));
  if (s.empty() || s.front() != '(') return fail("expected '('");
  if (s.back() != ')') return fail("expected ')'");
  s = trim(s.substr(1, s.size() - 2));

  auto split = std::find_if(s.begin(), s.end(), is_space);
  if (split == s.end()) return fail("expected two coordinates");
  std::string_view xs(s.data(), static_cast<std::size_t>(split - s.begin()));
  std::string_view ys = trim(s.substr(xs.size()));
  if (std::any_of(ys.begin(), ys.end(), is_space)) return fail("expected two coordinates");

  auto x = parse_finite_double(xs);
  auto y = parse_finite_double(ys);
  if (!x || !y) return fail("bad coordinate");
  return Point{*x, *y};
}

}  // namespace

SensorField parse_dataset(std::string_view text) {
  std::vector<Point> points;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (trim(line).empty()) continue;
    points.push_back(parse_record(line, line_no));
  }
  if (points.empty()) throw EmptyDatasetError();

  double width = 0.0;
  double height = 0.0;
  for (const Point& p : points) {
    width = std::max(width, p.x);
    height = std::max(height, p.y);
  }
  return SensorField(std::move(points), width, height);
}

SensorField read_dataset(std::istream& in) {
  std::string text(std::istreambuf_iterator<char>(in), {});
  return parse_dataset(text);
}

SensorField load_dataset(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open dataset '" + path + "'");
  return read_dataset(in);
}

std::string write_dataset(const SensorField& field) {
  std::string out;
  out.reserve(field.size() * 40);
  for (const Point& p : field.points()) {
    out += "P (";
    out += format_shortest(p.x);
    out += ' ';
    out += format_shortest(p.y);
    out += ")\n";
  }
  return out;
}

void save_dataset(const SensorField& field, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write dataset '" + path + "'");
  out << write_dataset(field);
}

}  // namespace wsnroute
