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

#include "cfcolor/coloring.hpp"

#include <algorithm>

namespace cfcolor {

bool Coloring::is_total() const noexcept {
  return std::none_of(colors_.begin(), colors_.end(), [](Color c) { return c == kBlank; });
}

std::size_t Coloring::num_colors() const {
  std::vector<Color> used;
  used.reserve(colors_.size());
  for (Color c : colors_)
    if (c != kBlank) used.push_back(c);
  std::sort(used.begin(), used.end());
  return static_cast<std::size_t>(std::unique(used.begin(), used.end()) - used.begin());
}

Color Coloring::max_color() const noexcept {
  Color best = kBlank;
  for (Color c : colors_) best = std::max(best, c);
  return best;
}

std::size_t Coloring::blank_count() const noexcept {
  return static_cast<std::size_t>(std::count(colors_.begin(), colors_.end(), kBlank));
}

std::vector<Color> compress_colors(std::span<const Color> colors) {
  std::vector<Color> distinct;
  for (Color c : colors)
    if (c != kBlank) distinct.push_back(c);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  std::vector<Color> out(colors.size(), kBlank);
  for (std::size_t i = 0; i < colors.size(); ++i) {
    if (colors[i] == kBlank) continue;
    const auto it = std::lower_bound(distinct.begin(), distinct.end(), colors[i]);
    out[i] = static_cast<Color>(it - distinct.begin()) + 1;
  }
  return out;
}

}  // namespace cfcolor
