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

#include "cfcolor/generators.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <set>

#include "cfcolor/rng.hpp"

namespace cfcolor {

namespace {

constexpr std::pair<FamilyTag, std::string_view> kFamilyNames[] = {
    {FamilyTag::complete, "complete"},
    {FamilyTag::star, "star"},
    {FamilyTag::path, "path"},
    {FamilyTag::cycle, "cycle"},
    {FamilyTag::subdivided_complete, "subdivided-complete"},
    {FamilyTag::line_graph_of, "line-graph"},
    {FamilyTag::gnp, "gnp"},
    {FamilyTag::geometric, "geometric"},
};

void require(bool ok, const char* field, const std::string& message) {
  if (!ok) throw ParameterError(field, message);
}

}  // namespace

std::string_view family_name(FamilyTag tag) {
  for (const auto& [t, name] : kFamilyNames)
    if (t == tag) return name;
  return "unknown";
}

FamilyTag parse_family(std::string_view name) {
  for (const auto& [t, n] : kFamilyNames)
    if (n == name) return t;
  throw ParameterError("family", "unknown family '" + std::string(name) + "'");
}

Graph generate(const GraphFamily& f) {
  switch (f.tag) {
    case FamilyTag::complete:
      require(f.n >= 1, "n", "complete requires n >= 1");
      return complete_graph(f.n);
    case FamilyTag::star:
      require(f.n >= 1, "n", "star requires at least one leaf");
      return star_graph(f.n);
    case FamilyTag::path:
      require(f.n >= 1, "n", "path requires n >= 1");
      return path_graph(f.n);
    case FamilyTag::cycle:
      require(f.n >= 3, "n", "cycle requires n >= 3");
      return cycle_graph(f.n);
    case FamilyTag::subdivided_complete:
      require(f.n >= 1, "n", "subdivided_complete requires n >= 1");
      return subdivided_complete_graph(f.n);
    case FamilyTag::line_graph_of:
      require(f.base != nullptr, "base", "line_graph_of requires a base family");
      return line_graph(generate(*f.base));
    case FamilyTag::gnp:
      require(f.p >= 0.0 && f.p <= 1.0, "p", "gnp requires 0 <= p <= 1");
      return gnp_graph(f.n, f.p, f.seed);
    case FamilyTag::geometric:
      require(f.radius >= 0.0, "radius", "geometric requires radius >= 0");
      return geometric_graph(f.n, f.radius, f.seed);
  }
  throw ParameterError("tag", "unhandled family");
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph(leaves + 1, edges);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  require(n >= 3, "n", "cycle requires n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph(n, edges);
}

Graph subdivided_complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  Vertex next = static_cast<Vertex>(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) {
      edges.emplace_back(i, next);
      edges.emplace_back(j, next);
      ++next;
    }
  return Graph(next, edges);
}

Graph line_graph(const Graph& g) {
  const auto base_edges = g.edges();
  // incident[v] lists indices of base edges touching v
  std::vector<std::vector<Vertex>> incident(g.num_vertices());
  for (Vertex e = 0; e < base_edges.size(); ++e) {
    incident[base_edges[e].first].push_back(e);
    incident[base_edges[e].second].push_back(e);
  }
  std::vector<Edge> edges;
  for (const auto& list : incident)
    for (std::size_t a = 0; a < list.size(); ++a)
      for (std::size_t b = a + 1; b < list.size(); ++b) edges.emplace_back(list[a], list[b]);
  return Graph(base_edges.size(), edges);
}

Graph gnp_graph(std::size_t n, double p, std::uint64_t seed) {
  require(p >= 0.0 && p <= 1.0, "p", "gnp requires 0 <= p <= 1");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph geometric_graph(std::size_t n, double radius, std::uint64_t seed) {
  require(radius >= 0.0, "radius", "geometric requires radius >= 0");
  Rng rng(seed);
  std::vector<std::pair<double, double>> points(n);
  for (auto& [x, y] : points) {
    x = rng.unit();
    y = rng.unit();
  }
  std::vector<Edge> edges;
  const double r2 = radius * radius;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      const double dx = points[u].first - points[v].first;
      const double dy = points[u].second - points[v].second;
      if (dx * dx + dy * dy <= r2) edges.emplace_back(u, v);
    }
  return Graph(n, edges);
}

Graph without_isolated_vertices(const Graph& g) {
  VertexSet keep;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (g.degree(v) > 0) keep.push_back(v);
  return induced_subgraph(g, keep).graph;
}

bool is_connected(const Graph& g) {
  if (g.num_vertices() == 0) return true;
  std::vector<char> seen(g.num_vertices(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == g.num_vertices();
}

std::vector<Graph> connected_graphs(std::size_t n) {
  require(n >= 1 && n <= 6, "n", "connected_graphs supports 1 <= n <= 6");
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);

  // pair_index[u][v] = bit position of {u,v} in the edge mask
  std::vector<std::vector<unsigned>> pair_index(n, std::vector<unsigned>(n, 0));
  for (unsigned i = 0; i < pairs.size(); ++i) {
    pair_index[pairs[i].first][pairs[i].second] = i;
    pair_index[pairs[i].second][pairs[i].first] = i;
  }
  std::vector<std::vector<Vertex>> perms;
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  std::set<std::uint32_t> canonical;
  std::vector<Graph> out;
  const std::uint32_t masks = std::uint32_t{1} << pairs.size();
  for (std::uint32_t mask = 0; mask < masks; ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) + 1 < n) continue;
    std::vector<Edge> edges;
    for (unsigned i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1U) edges.push_back(pairs[i]);
    Graph g(n, edges);
    if (!is_connected(g)) continue;
    std::uint32_t best = mask;
    for (const auto& p : perms) {
      std::uint32_t image = 0;
      for (const auto& [u, v] : edges) image |= std::uint32_t{1} << pair_index[p[u]][p[v]];
      best = std::min(best, image);
    }
    if (canonical.insert(best).second) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace cfcolor
