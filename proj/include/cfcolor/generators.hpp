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
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "cfcolor/graph.hpp"

namespace cfcolor {

enum class FamilyTag {
  complete,
  star,
  path,
  cycle,
  subdivided_complete,
  line_graph_of,
  gnp,
  geometric,
};

std::string_view family_name(FamilyTag tag);
/// Accepts the names printed by family_name(); throws ParameterError otherwise.
FamilyTag parse_family(std::string_view name);

/// Parameter bundle for generate(). `n` is the order for complete, path,
/// cycle, gnp, geometric and subdivided_complete, and the leaf count for star.
struct GraphFamily {
  FamilyTag tag = FamilyTag::complete;
  std::size_t n = 1;
  double p = 0.0;
  double radius = 0.0;
  std::uint64_t seed = 0;
  std::shared_ptr<const GraphFamily> base;  // line_graph_of only
};

Graph generate(const GraphFamily& family);

Graph complete_graph(std::size_t n);
/// K_{1,k}: center 0, leaves 1..k.
Graph star_graph(std::size_t leaves);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
/// K_n with every edge subdivided once. Vertices 0..n-1 are the originals;
/// the subdivision vertex of edge {i,j} (i<j) follows in lexicographic order.
Graph subdivided_complete_graph(std::size_t n);
/// L(G): one vertex per edge of G in (u<v) lexicographic order.
Graph line_graph(const Graph& g);
/// G(n, p) with one draw per pair in (u<v) lexicographic order.
Graph gnp_graph(std::size_t n, double p, std::uint64_t seed);
/// Unit-square random geometric graph: uniform points, edge iff distance <= radius.
Graph geometric_graph(std::size_t n, double radius, std::uint64_t seed);

/// Drops isolated vertices, keeping the relative order of the rest.
Graph without_isolated_vertices(const Graph& g);

bool is_connected(const Graph& g);

/// One representative per isomorphism class of connected graphs on n
/// vertices (brute-force canonical form). Supports 1 <= n <= 6.
std::vector<Graph> connected_graphs(std::size_t n);

}  // namespace cfcolor
