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
#include <stdexcept>
#include <string>

namespace wsnroute {

/// Precondition violation on a public operation (bad counts, out-of-range
/// node ids, malformed schedules).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed dataset or config line. `line()` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class EmptyDatasetError : public std::runtime_error {
 public:
  EmptyDatasetError() : std::runtime_error("dataset contains no points") {}
};

/// Exhaustive search refused because the instance is too large.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A link was requested from a node whose battery is exhausted.
class DeadNodeError : public std::runtime_error {
 public:
  explicit DeadNodeError(std::size_t node)
      : std::runtime_error("node " + std::to_string(node) + " has no residual energy"),
        node_(node) {}

  std::size_t node() const noexcept { return node_; }

 private:
  std::size_t node_;
};

}  // namespace wsnroute
