/*
Copyright 2026 The cfcolor Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cfcolor {

using Vertex = std::uint32_t;
using Color = std::uint32_t;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input parameter is out of its valid range. `field()` names it.
class ParameterError : public Error {
 public:
  ParameterError(std::string field, const std::string& message)
      : Error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Malformed text input; `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A documented precondition of an algorithm does not hold for the input.
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& message,
                             std::optional<Vertex> vertex = std::nullopt)
      : Error(message), vertex_(vertex) {}
  std::optional<Vertex> vertex() const noexcept { return vertex_; }

 private:
  std::optional<Vertex> vertex_;
};

/// A resampling loop hit its round cap.
class RetryExhausted : public Error {
 public:
  RetryExhausted(const std::string& message, std::uint64_t rounds,
                 std::vector<std::size_t> remaining)
      : Error(message), rounds_(rounds), remaining_(std::move(remaining)) {}
  std::uint64_t rounds() const noexcept { return rounds_; }
  /// Indices of the bad events (edges or vertices) still violated.
  const std::vector<std::size_t>& remaining() const noexcept { return remaining_; }

 private:
  std::uint64_t rounds_;
  std::vector<std::size_t> remaining_;
};

}  // namespace cfcolor
