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
#include <optional>
#include <utility>
#include <vector>

#include "cfcolor/coloring.hpp"
#include "cfcolor/graph.hpp"
#include "json.hpp"

namespace cfcolor {

struct LayeredParams {
  std::size_t n = 0;
  double eps = 0.002;
  std::uint64_t seed = 0;
};

struct LayerMeta {
  std::size_t n = 0;
  double eps = 0.0;
  double eps0 = 0.0;     // eps / 3
  std::size_t layers = 0;  // floor(ln n)
  std::vector<std::size_t> layer;    // 1-based layer index per vertex
  std::vector<double> weight;        // (1 - eps0)^layer
  std::vector<std::size_t> layer_sizes;  // index 0 is layer 1
  std::size_t r_colors = 0;          // floor(eps0^3 ln^2 n)

  double layer_weight(std::size_t i) const;
};

/// Layers of floor(n / L) consecutive vertices, the remainder going to the
/// last layer. Each pair x < y (same layer included) is an edge with
/// probability w_x * w_y. Throws ParameterError unless n >= 3 and
/// 0 < eps < 0.003.
std::pair<Graph, LayerMeta> generate_layered(const LayeredParams& p);

/// Metadata only, without drawing edges.
LayerMeta layered_meta(std::size_t n, double eps);

double set_weight(const LayerMeta& meta, const VertexSet& s);

/// Vertices outside S with exactly one neighbor in S.
VertexSet unique_neighbor_set(const Graph& g, const VertexSet& s);

enum class SetClass { light, heavy };

/// Heavy iff w(S) > sqrt(n).
SetClass classify_set(const LayerMeta& meta, const VertexSet& s);

/// Model expectation of d(x): sum over layers j of (|L_j| - [j = layer(x)]) w_x w_j.
std::vector<double> expected_degrees(const LayerMeta& meta);

struct LayerStats {
  std::size_t layer = 0;
  std::size_t size = 0;
  double weight = 0.0;
  double expected_degree = 0.0;
  double mean_degree = 0.0;
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  std::size_t flagged = 0;
};

struct DegreeReport {
  double alpha = 0.0;
  std::vector<LayerStats> layers;
  VertexSet flagged;  // |d(x) - mu(x)| >= alpha mu(x)
  std::size_t max_degree = 0;
  std::size_t min_degree = 0;
  Vertex max_degree_vertex = 0;
  Vertex min_degree_vertex = 0;
  std::size_t max_degree_layer = 0;
  std::size_t min_degree_layer = 0;
  double ratio = 0.0;  // delta / Delta^{1 - eps}
};

DegreeReport degree_report(const Graph& g, const LayerMeta& meta, double alpha);

/// Vertices x such that no w in N[x] has a color unique within N[x].
/// Blank vertices count as uncolored and never take care of anything.
VertexSet not_taken_care_of(const Graph& g, const Coloring& f);

struct TakecareReport {
  std::size_t r = 0;
  std::size_t trials = 0;
  std::size_t min_uncovered = 0;
  double mean_uncovered = 0.0;
  std::optional<std::size_t> chi_cn;  // exact, for n <= 14
};

/// Runs `trials` uniform random r-colorings; trial t draws from
/// derive_seed(seed, t).
TakecareReport takecare_probe(const Graph& g, std::size_t r, std::size_t trials, std::uint64_t seed);

/// Probability, under the model, that x is taken care of by some member of S
/// (all of S sharing one color):
/// sum over s of w_s w_x prod_{y != s} (1 - w_y w_x).
double take_care_probability(const LayerMeta& meta, Vertex x, const VertexSet& s);

/// e^{eps0} ln(1 / (1 - e^{-eps0})).
double f_eps0(double eps0);

struct SetDiagnostics {
  std::optional<std::size_t> independence_number;  // exact, n <= 60
  double independence_target = 0.0;                // n^{0.003}
  std::size_t heavy_samples = 0;
  std::size_t heavy_min_unique = 0;                // min |N1(S)| over sampled heavy S
  double heavy_target = 0.0;                       // n^{0.6}
  std::size_t light_sets = 0;
  std::size_t light_union = 0;                     // |union of N1(S_i)|
  double light_target = 0.0;                       // n - n^{0.7}
  double min_weight = 0.0;
  double weight_floor = 0.0;                       // n^{-2 eps0}
  std::size_t light_checked = 0;
  std::size_t light_size_violations = 0;           // |S| >= n^{0.5 + 2 eps0}
};

/// Informational comparisons against the asymptotic claims plus the exact
/// finite checks (weight floor, light-set size bound) on sampled sets.
SetDiagnostics set_diagnostics(const Graph& g, const LayerMeta& meta, std::size_t samples, std::uint64_t seed);

nlohmann::json to_json(const LayerMeta& meta);
nlohmann::json to_json(const DegreeReport& report);
nlohmann::json to_json(const TakecareReport& report);
nlohmann::json to_json(const SetDiagnostics& diag);

}  // namespace cfcolor
