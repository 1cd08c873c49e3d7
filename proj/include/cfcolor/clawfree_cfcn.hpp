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
#include "cfcolor/graph.hpp"
#include "cfcolor/rng.hpp"

namespace cfcolor {

struct CfcnParams {
  std::size_t k = 2;
  double c = 0.02;
  std::size_t trials_per_round = 8;
  std::uint64_t seed = 0;
};

/// Defaults with k = max(2, claw_number(g) + 1).
CfcnParams make_cfcn_params(const Graph& g, std::uint64_t seed);

/// One sampled trial of a round, in ids of the live graph it was drawn from.
struct RoundState {
  unsigned exponent = 0;  // i: members of S_t kept with probability 2^-i
  VertexSet chosen;       // I_t, a subset of S_t
  VertexSet satisfied;    // I_t plus live vertices outside S_t with exactly one neighbor in I_t
};

/// The vertices of `live` outside `independent` with exactly one neighbor in
/// `chosen`, together with `chosen`.
VertexSet satisfied_by(const Graph& live, const VertexSet& independent, const VertexSet& chosen);

/// A trial with a fixed exponent: each member of `independent` is kept
/// independently with probability 2^-exponent.
RoundState sample_trial(const Graph& live, const VertexSet& independent, unsigned exponent, Rng& rng);

/// Best of p.trials_per_round trials (largest satisfied set, ties to the
/// earlier trial). Trial 1 is always (i = 0, I = S); later trials draw i
/// uniformly from {0..floor(log2 k)}. `random_fraction_sum` accumulates
/// |satisfied|/|V(live)| over the random trials.
RoundState sample_round(const Graph& live, const VertexSet& independent, const CfcnParams& p, Rng& rng,
                        double* random_fraction_sum = nullptr);

struct RoundRecord {
  std::size_t live = 0;
  std::size_t independent = 0;
  unsigned exponent = 0;
  std::size_t chosen = 0;
  std::size_t satisfied = 0;
  Color color = 0;
  /// Mean satisfied fraction over this round's random trials.
  double random_fraction = 0.0;
  /// Largest |N(w) n S_t| seen for w outside S_t.
  std::size_t max_independent_neighbors = 0;
};

struct CfcnResult {
  Coloring coloring;
  std::size_t rounds = 0;
  std::vector<RoundRecord> history;
  std::size_t leftover_vertices = 0;
  std::size_t colors_used = 0;
  /// ceil(ln n * log2 k / c) + 1, the round count plus the leftover color.
  std::size_t color_bound = 0;
  std::vector<std::string> warnings;
};

std::size_t cfcn_color_bound(std::size_t n, std::size_t k, double c);

/// Total CFCN coloring: each round colors a sampled subset of a maximal
/// independent set of the still-unsatisfied vertices with a fresh color and
/// drops every vertex that now sees that color exactly once; vertices never
/// chosen share one extra color at the end.
CfcnResult color_clawfree_cfcn(const Graph& g, const CfcnParams& p);

}  // namespace cfcolor
