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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cfcolor/coloring.hpp"
#include "cfcolor/graph.hpp"
#include "cfcolor/hypergraph.hpp"
#include "json.hpp"

namespace cfcolor {

/// Structure behind the K_{1,k}-free CFON coloring. All vertex sets use ids of
/// the input graph.
struct Decomposition {
  std::size_t k = 0;
  std::size_t max_degree = 0;
  double log_max_degree = 0.0;  // ln(Delta)

  VertexSet A;   // maximal independent set
  VertexSet A1;  // members of A with degree <= k ln(Delta)
  VertexSet A2;
  VertexSet X;   // union of N(v) over v in A1

  InducedSubgraph gprime;  // G[V \ (A u X)]
  /// Color classes L_1..L_s of gprime after normalization: every vertex in
  /// L_i has a neighbor in each L_j, j < i.
  std::vector<VertexSet> classes;
  std::size_t b_classes = 0;  // t = min(s, ceil(12 ln Delta))
  VertexSet B;
  VertexSet C;
  VertexSet AX;     // members of A with a neighbor in X
  VertexSet AXbar;

  std::size_t claw_number = 0;
  /// claw_number < k, i.e. the input is K_{1,k}-free.
  bool k_claw_free = false;
};

/// Throws PreconditionError when Delta < 2 or some vertex is isolated, and
/// ParameterError when k < 2.
Decomposition decompose(const Graph& g, std::size_t k);

/// Moves vertices of later classes into the earliest class holding none of
/// their neighbors until no move applies, then drops empty trailing classes.
void normalize_classes(const Graph& g, std::vector<VertexSet>& classes);

/// One of the five auxiliary hypergraphs, on local ids.
struct StageHypergraph {
  std::string name;
  Hypergraph hypergraph;
  std::vector<Vertex> vertices;  // local id -> graph vertex
  std::vector<Vertex> served;    // edge index -> graph vertex whose neighborhood it is
  std::vector<Vertex> unserved;  // vertices whose defining intersection was empty
};

/// H1 = (B, {N_G'(v) n B : v in C}), H2 = (A2, {N(v) n A2 : v in B}),
/// H3 = (A1, {N(v) n A1 : v in X}), H4 = (X, {N(v) n X : v in AX}),
/// H5 = (C, {N(v) n C : v in AXbar}). Empty intersections are dropped and
/// listed in `unserved`. Vertex sets only contain members of some edge.
std::array<StageHypergraph, 5> build_hypergraphs(const Graph& g, const Decomposition& d);

struct StageRecord {
  std::string name;
  std::string method;  // "lll", "exact" or "none"
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t max_degree = 0;
  std::size_t colors = 0;
  Color offset = 0;  // stage color c is written as offset + c
};

struct Repair {
  Vertex unsatisfied = 0;  // vertex that prompted the repair
  Vertex recolored = 0;
  Color color = 0;
};

struct PaletteCertificate {
  std::size_t k = 0;
  std::size_t max_degree = 0;
  std::vector<StageRecord> stages;
  std::size_t leftover_vertices = 0;
  std::size_t leftover_colors = 0;  // 0 or 1
  std::vector<Repair> repairs;
  std::size_t repair_colors = 0;
  std::size_t total = 0;  // sum of all stage, leftover and repair colors
  double budget = 0.0;    // 46 k ln(Delta) + 2k + 3
  std::vector<std::string> notes;

  bool fallback_fired() const noexcept { return !repairs.empty(); }
  bool within_budget() const noexcept { return static_cast<double>(total) <= budget; }
};

double cfon_budget(std::size_t k, std::size_t max_degree);

nlohmann::json to_json(const PaletteCertificate& cert);

struct CfonOptions {
  std::optional<std::size_t> k;  // default claw_number + 1 (at least 2)
  std::uint64_t seed = 0;
  bool fallback = true;
};

struct CfonResult {
  Coloring coloring;
  PaletteCertificate certificate;
};

/// Thrown with fallback off when the five stages leave vertices without a
/// uniquely colored neighbor.
class UnsatisfiedVertices : public Error {
 public:
  explicit UnsatisfiedVertices(std::vector<Vertex> vertices);
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }

 private:
  std::vector<Vertex> vertices_;
};

/// Total CFON coloring of a graph without isolated vertices through the five
/// stage hypergraphs with disjoint palettes, one shared color for vertices no
/// stage colored, and (when enabled) repair of any vertex still unsatisfied
/// by giving one of its neighbors a fresh color.
CfonResult color_clawfree_cfon(const Graph& g, const CfonOptions& options = {});

/// Repairs `f` in place so that every vertex listed in `unsatisfied` sees a
/// unique color in its open neighborhood; colors are taken from next_color up.
/// Returns the repairs made. Satisfied vertices stay satisfied.
std::vector<Repair> repair_open_coloring(const Graph& g, Coloring& f, const VertexSet& unsatisfied,
                                         Color next_color);

}  // namespace cfcolor
