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
#include <span>
#include <vector>

#include "cfcolor/coloring.hpp"
#include "cfcolor/graph.hpp"

namespace cfcolor {

/// Vertex universe 0..universe-1 plus a list of nonempty hyperedges. Member
/// lists are stored sorted and deduplicated; duplicate hyperedges are kept.
class Hypergraph {
 public:
  Hypergraph() = default;
  explicit Hypergraph(std::size_t universe) : universe_(universe) {}
  /// Throws ParameterError on an empty edge or an out-of-range member.
  Hypergraph(std::size_t universe, std::vector<VertexSet> edges);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  const VertexSet& edge(std::size_t i) const { return edges_[i]; }
  std::span<const VertexSet> edges() const noexcept { return edges_; }

  /// Edge-membership count of every vertex.
  std::vector<std::size_t> degrees() const;
  /// incidence()[v] = indices of edges containing v, ascending.
  std::vector<std::vector<std::size_t>> incidence() const;
  /// Number of edges equal to some earlier edge (diagnostic only).
  std::size_t duplicate_edge_count() const;

 private:
  std::size_t universe_ = 0;
  std::vector<VertexSet> edges_;
};

std::size_t hyper_max_degree(const Hypergraph& h);

/// Max over edges E of the number of other edges (by index) meeting E.
std::size_t max_edge_intersections(const Hypergraph& h);

struct CfReport {
  bool ok = true;
  std::vector<std::size_t> violating_edges;
};

/// An edge is satisfied when some color has multiplicity exactly one among
/// its non-blank members; blank members carry no color.
CfReport is_cf_coloring(const Hypergraph& h, const Coloring& f);

/// Number of distinct non-blank colors on `members`.
std::size_t distinct_color_count(std::span<const Vertex> members, const Coloring& f);

/// Complete backtracking search for a CF coloring with colors 1..kmax.
/// Vertices in no edge get color 1. nullopt means no such coloring exists;
/// never the case when kmax >= hyper_max_degree(h) + 1.
std::optional<Coloring> cf_color_bounded(const Hypergraph& h, Color kmax);

enum class NeighborhoodMode { open, closed };

/// One edge per vertex in vertex order: N(v) for open, N[v] for closed.
/// Open mode throws PreconditionError naming the first isolated vertex.
Hypergraph neighborhood_hypergraph(const Graph& g, NeighborhoodMode mode);

}  // namespace cfcolor
