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

#include <cstdint>
#include <vector>

#include "cfcolor/coloring.hpp"
#include "cfcolor/graph.hpp"

namespace cfcolor {

/// What sample_window_set does when some vertex has degree below
/// c * Delta / ln^eps(Delta).
enum class DegreePolicy {
  enforce,  // PreconditionError naming the first such vertex
  report,   // list them in the result and continue; the window is still checked
};

struct MinDegParams {
  double c = 1.0;
  double eps = 0.0;
  std::size_t max_degree = 0;
  double sample_prob = 1.0;  // min(1, 144 ln^{1+eps}(2 Delta) / (c Delta))
  double window_lo = 0.0;    // 108 ln(2 Delta)
  double window_hi = 0.0;    // (180 / c) ln^{1+eps}(2 Delta)
  std::uint64_t max_resample_rounds = 1;
  std::uint64_t seed = 0;
  DegreePolicy policy = DegreePolicy::enforce;
};

/// Throws ParameterError for c <= 0, eps outside [0, 1], Delta < 2, or an
/// empty window.
MinDegParams make_mindeg_params(const Graph& g, double c, double eps, std::uint64_t seed,
                                DegreePolicy policy = DegreePolicy::enforce);

/// c * Delta / ln^eps(Delta).
double min_degree_requirement(const MinDegParams& p);

struct WindowSample {
  VertexSet A;
  std::vector<std::size_t> counts;  // |N(v) n A| per vertex
  std::uint64_t rounds = 0;
  std::uint64_t restarts = 0;
  VertexSet low_degree;  // vertices below the degree requirement (report policy)
};

/// Bernoulli(sample_prob) membership followed by local resampling of N(v) for
/// the lowest v whose count leaves (window_lo, window_hi); a full restart
/// every max_resample_rounds / 2 rounds. Throws PreconditionError or
/// RetryExhausted (with the violating vertices).
WindowSample sample_window_set(const Graph& g, const MinDegParams& p);

bool in_window(std::size_t count, const MinDegParams& p);

struct MinDegResult {
  Coloring coloring;
  WindowSample sample;
  bool fallback = false;  // exact bounded search used instead
  std::uint64_t lll_rounds = 0;
  std::size_t colors_used = 0;
  double ell = 0.0;
  double r = 0.0;
  /// ceil((490 / c) ln^{1+eps}(2 Delta)) + 1
  std::size_t color_bound = 0;
};

std::size_t mindeg_color_bound(const MinDegParams& p);

/// CFON coloring: CF-color {N(v) n A : v} with the near-uniform colorer
/// (r = 108 ln(2 Delta), ell = (5 / 3c) ln^eps(2 Delta)) and give V \ A one
/// unused color. When sampling or resampling runs out of rounds, falls back
/// to an exact bounded CF coloring of the open neighborhoods.
MinDegResult color_mindeg_cfon(const Graph& g, const MinDegParams& p);

}  // namespace cfcolor
