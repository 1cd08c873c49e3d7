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
#include <string>
#include <vector>

#include "cfcolor/coloring.hpp"
#include "cfcolor/hypergraph.hpp"

namespace cfcolor {

/// Parameters for coloring a near-uniform hypergraph, where every edge
/// satisfies r <= |E| <= ell * r and meets at most `gamma` other edges.
struct LLLParams {
  double ell = 1.0;
  double r = 1.0;
  std::size_t gamma = 0;
  Color palette_size = 1;
  std::uint64_t max_resample_rounds = 1;
  std::uint64_t seed = 0;
};

/// ceil(e * ell * r).
Color lll_palette_size(double ell, double r);

/// Fills gamma from the hypergraph, palette_size = ceil(e*ell*r) and a round
/// cap of 64 per edge.
LLLParams make_lll_params(const Hypergraph& h, double ell, double r, std::uint64_t seed);

struct PreconditionReport {
  bool ok = true;
  std::vector<std::string> failures;
};

/// Edge sizes inside [r, ell*r], r >= 2*log2(4*Gamma) (vacuous when Gamma = 0),
/// gamma field not below the actual Gamma, and a large enough palette.
PreconditionReport check_preconditions(const Hypergraph& h, const LLLParams& p);

struct LLLResult {
  Coloring coloring;
  std::uint64_t rounds = 0;
};

/// Uniform random coloring from {1..palette_size} followed by resampling:
/// while some edge has at most |E|/2 distinct colors, redraw every vertex of
/// the lowest-indexed such edge. The result gives each edge more than |E|/2
/// distinct colors, hence a CF coloring.
///
/// Throws PreconditionError if check_preconditions fails and RetryExhausted
/// when the round cap is hit.
LLLResult color_near_uniform(const Hypergraph& h, const LLLParams& p);

}  // namespace cfcolor
