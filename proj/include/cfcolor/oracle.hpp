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
#include <optional>
#include <vector>

#include "cfcolor/coloring.hpp"
#include "cfcolor/graph.hpp"
#include "cfcolor/hypergraph.hpp"

namespace cfcolor {

struct VerifyReport {
  bool ok = true;
  std::vector<Vertex> violating;
};

/// Checks that every vertex has a color of multiplicity one in N(v) (open) or
/// N[v] (closed), counting non-blank vertices only. Open mode throws
/// PreconditionError on an isolated vertex.
VerifyReport verify(const Graph& g, const Coloring& f, NeighborhoodMode mode);

/// Exhaustive search for a total CFON/CFCN coloring with at most k colors.
/// First vertex is fixed to 1 and colors are introduced in ascending order.
std::optional<Coloring> find_neighborhood_coloring(const Graph& g, NeighborhoodMode mode, Color k);

// Exact chromatic numbers by iterative deepening on k. Exponential; intended
// for n up to about 16.

/// Throws PreconditionError on an isolated vertex. 0 for the empty graph.
std::size_t chi_on_exact(const Graph& g);
std::size_t chi_cn_exact(const Graph& g);
/// Smallest k for which cf_color_bounded(h, k) succeeds.
std::size_t chi_cf_exact(const Hypergraph& h);

}  // namespace cfcolor
