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
#include <span>
#include <vector>

#include "cfcolor/error.hpp"

namespace cfcolor {

/// Reserved value for an intentionally uncolored vertex. Never a color.
inline constexpr Color kBlank = 0;

/// Total or partial map vertex -> positive color.
class Coloring {
 public:
  Coloring() = default;
  explicit Coloring(std::size_t n, Color fill = kBlank) : colors_(n, fill) {}
  explicit Coloring(std::vector<Color> colors) : colors_(std::move(colors)) {}

  std::size_t size() const noexcept { return colors_.size(); }
  Color operator[](Vertex v) const { return colors_[v]; }
  bool is_blank(Vertex v) const { return colors_[v] == kBlank; }

  void set(Vertex v, Color c) { colors_[v] = c; }
  void clear(Vertex v) { colors_[v] = kBlank; }

  bool is_total() const noexcept;
  /// Number of distinct non-blank values in use.
  std::size_t num_colors() const;
  Color max_color() const noexcept;
  std::size_t blank_count() const noexcept;

  std::span<const Color> values() const noexcept { return colors_; }

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<Color> colors_;
};

/// Relabels non-blank values densely as 1..c, preserving their order; blanks stay blank.
std::vector<Color> compress_colors(std::span<const Color> colors);

}  // namespace cfcolor
