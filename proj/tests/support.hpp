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

// Brute-force reference implementations and random instance generators used
// across the test suites. They deliberately avoid the library's search code.

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "cfcolor/coloring.hpp"
#include "cfcolor/generators.hpp"
#include "cfcolor/graph.hpp"
#include "cfcolor/hypergraph.hpp"
#include "cfcolor/rng.hpp"

namespace cfcolor::testing {

inline Graph make_graph(std::size_t n, std::vector<Edge> edges) { return Graph(n, edges); }

/// True iff some color occurs exactly once among the non-blank members.
inline bool has_unique(const std::vector<Vertex>& members, const std::vector<Color>& f) {
  std::map<Color, int> count;
  for (Vertex v : members)
    if (f[v] != 0) ++count[f[v]];
  for (const auto& [c, k] : count)
    if (k == 1) return true;
  return false;
}

inline std::vector<Vertex> hood(const Graph& g, Vertex v, bool closed) {
  std::vector<Vertex> out(g.neighbors(v).begin(), g.neighbors(v).end());
  if (closed) out.push_back(v);
  return out;
}

inline bool brute_valid(const Graph& g, const std::vector<Color>& f, bool closed) {
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (!has_unique(hood(g, v, closed), f)) return false;
  return true;
}

/// Calls fn on every total coloring of n vertices with colors 1..k until fn
/// returns true; returns whether it did.
template <class Fn>
bool for_each_coloring(std::size_t n, Color k, Fn fn) {
  std::vector<Color> f(n, 1);
  for (;;) {
    if (fn(f)) return true;
    std::size_t i = 0;
    while (i < n && f[i] == k) f[i++] = 1;
    if (i == n) return false;
    ++f[i];
  }
}

/// Smallest k with a total coloring valid under the chosen neighborhoods,
/// by plain enumeration.
inline std::size_t brute_chi(const Graph& g, bool closed) {
  if (g.num_vertices() == 0) return 0;
  for (Color k = 1;; ++k)
    if (for_each_coloring(g.num_vertices(), k, [&](const std::vector<Color>& f) { return brute_valid(g, f, closed); }))
      return k;
}

inline bool brute_cf(const Hypergraph& h, const std::vector<Color>& f) {
  for (const auto& e : h.edges())
    if (!has_unique(e, f)) return false;
  return true;
}

inline std::size_t brute_independence(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    for (Vertex u = 0; u < n && ok; ++u)
      if (mask >> u & 1)
        for (Vertex w : g.neighbors(u))
          if (mask >> w & 1) ok = false;
    if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcountll(mask)));
  }
  return best;
}

/// Random hypergraph: universe in [1, max_universe], 0..max_edges edges of
/// random nonempty subsets.
inline Hypergraph random_hypergraph(Rng& rng, std::size_t max_universe, std::size_t max_edges) {
  const std::size_t u = 1 + rng.below(max_universe);
  const std::size_t m = rng.below(max_edges + 1);
  std::vector<VertexSet> edges;
  for (std::size_t i = 0; i < m; ++i) {
    VertexSet e;
    while (e.empty())
      for (Vertex v = 0; v < u; ++v)
        if (rng.bernoulli(0.4)) e.push_back(v);
    edges.push_back(std::move(e));
  }
  return Hypergraph(u, std::move(edges));
}

/// gnp graphs on n vertices with isolated vertices removed, skipping draws
/// that end up edgeless.
inline Graph random_no_isolated(std::size_t n, double p, std::uint64_t seed) {
  for (std::uint64_t s = seed;; s += 1000003) {
    Graph g = without_isolated_vertices(gnp_graph(n, p, s));
    if (g.num_vertices() >= 2) return g;
  }
}

}  // namespace cfcolor::testing
