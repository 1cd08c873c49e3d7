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
#include <utility>
#include <vector>

#include "cfcolor/coloring.hpp"
#include "cfcolor/error.hpp"

namespace cfcolor {

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// Immutable after construction.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n);
  /// Duplicate edges (in either orientation) are merged. Self-loops and
  /// out-of-range endpoints throw ParameterError.
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t num_vertices() const noexcept { return adjacency_.size(); }
  std::size_t num_edges() const noexcept { return num_edges_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  std::size_t max_degree() const noexcept { return max_degree_; }
  std::size_t min_degree() const noexcept { return min_degree_; }

  bool adjacent(Vertex u, Vertex v) const;
  /// All edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;
  std::optional<Vertex> first_isolated_vertex() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adjacency_ == b.adjacency_; }

 private:
  void finalize();

  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t num_edges_ = 0;
  std::size_t max_degree_ = 0;
  std::size_t min_degree_ = 0;
};

/// G[S] relabeled to 0..|S|-1 in ascending order of the original ids.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

bool is_independent(const Graph& g, std::span<const Vertex> set);
bool is_maximal_independent(const Graph& g, std::span<const Vertex> set);

/// Greedy maximal independent set, scanning vertex ids in ascending order.
VertexSet maximal_independent_set(const Graph& g);

/// Greedy proper coloring in ascending id order using the smallest color not
/// taken by an earlier neighbor. Uses at most max_degree()+1 colors.
Coloring greedy_proper_coloring(const Graph& g);

/// Exact maximum independent set by branch and bound with a clique-cover
/// bound. Exponential in the worst case; meant for a few hundred vertices of
/// sparse complement or small n.
VertexSet maximum_independent_set(const Graph& g);
std::size_t independence_number(const Graph& g);

/// Largest k such that G has an induced K_{1,k}; 0 for edgeless graphs.
/// Computed as the max over v of the independence number of G[N(v)].
std::size_t claw_number(const Graph& g);

}  // namespace cfcolor
