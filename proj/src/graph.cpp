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

#include "cfcolor/graph.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <string>

namespace cfcolor {

Graph::Graph(std::size_t n) : adjacency_(n) { finalize(); }

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adjacency_(n) {
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n)
      throw ParameterError("edge", "endpoint out of range (" + std::to_string(u) + ", " +
                                       std::to_string(v) + ") for n = " + std::to_string(n));
    if (u == v) throw ParameterError("edge", "self-loop at vertex " + std::to_string(u));
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  finalize();
}

void Graph::finalize() {
  std::size_t total = 0;
  max_degree_ = 0;
  min_degree_ = adjacency_.empty() ? 0 : adjacency_.front().size();
  for (const auto& list : adjacency_) {
    total += list.size();
    max_degree_ = std::max(max_degree_, list.size());
    min_degree_ = std::min(min_degree_, list.size());
  }
  num_edges_ = total / 2;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < adjacency_.size(); ++u)
    for (Vertex v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::optional<Vertex> Graph::first_isolated_vertex() const {
  for (Vertex v = 0; v < adjacency_.size(); ++v)
    if (adjacency_[v].empty()) return v;
  return std::nullopt;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  InducedSubgraph sub;
  sub.to_parent.assign(vertices.begin(), vertices.end());
  std::sort(sub.to_parent.begin(), sub.to_parent.end());
  sub.to_parent.erase(std::unique(sub.to_parent.begin(), sub.to_parent.end()), sub.to_parent.end());

  constexpr Vertex kAbsent = static_cast<Vertex>(-1);
  std::vector<Vertex> local(g.num_vertices(), kAbsent);
  for (Vertex i = 0; i < sub.to_parent.size(); ++i) local[sub.to_parent[i]] = i;

  std::vector<Edge> edges;
  for (Vertex i = 0; i < sub.to_parent.size(); ++i)
    for (Vertex w : g.neighbors(sub.to_parent[i]))
      if (local[w] != kAbsent && i < local[w]) edges.emplace_back(i, local[w]);
  sub.graph = Graph(sub.to_parent.size(), edges);
  return sub;
}

bool is_independent(const Graph& g, std::span<const Vertex> set) {
  std::vector<char> in(g.num_vertices(), 0);
  for (Vertex v : set) in[v] = 1;
  for (Vertex v : set)
    for (Vertex w : g.neighbors(v))
      if (in[w]) return false;
  return true;
}

bool is_maximal_independent(const Graph& g, std::span<const Vertex> set) {
  if (!is_independent(g, set)) return false;
  std::vector<char> in(g.num_vertices(), 0);
  for (Vertex v : set) in[v] = 1;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (in[v]) continue;
    const auto nb = g.neighbors(v);
    if (std::none_of(nb.begin(), nb.end(), [&](Vertex w) { return in[w] != 0; })) return false;
  }
  return true;
}

VertexSet maximal_independent_set(const Graph& g) {
  VertexSet out;
  std::vector<char> blocked(g.num_vertices(), 0);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (blocked[v]) continue;
    out.push_back(v);
    for (Vertex w : g.neighbors(v)) blocked[w] = 1;
  }
  return out;
}

Coloring greedy_proper_coloring(const Graph& g) {
  Coloring f(g.num_vertices());
  std::vector<Vertex> seen(g.max_degree() + 2, static_cast<Vertex>(-1));
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    for (Vertex w : g.neighbors(v))
      if (!f.is_blank(w) && f[w] < seen.size()) seen[f[w]] = v;
    Color c = 1;
    while (seen[c] == v) ++c;
    f.set(v, c);
  }
  return f;
}

namespace {

using Bits = boost::dynamic_bitset<std::uint64_t>;

// Maximum clique search (Tomita-style greedy coloring bound) on the
// "compatible" relation, i.e. non-adjacency in g.
class IndependentSetSearch {
 public:
  explicit IndependentSetSearch(const Graph& g) : n_(g.num_vertices()), compatible_(n_, Bits(n_)) {
    for (Vertex v = 0; v < n_; ++v) {
      compatible_[v].set();
      compatible_[v].reset(v);
      for (Vertex w : g.neighbors(v)) compatible_[v].reset(w);
    }
  }

  VertexSet run() {
    if (n_ == 0) return {};
    Bits all(n_);
    all.set();
    expand(all);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  void expand(Bits candidates) {
    // Partition candidates into cliques of g; each contributes at most one
    // vertex to an independent set, so the class index bounds the gain.
    std::vector<Vertex> order;
    std::vector<std::size_t> bound;
    Bits uncolored = candidates;
    std::size_t classes = 0;
    while (uncolored.any()) {
      ++classes;
      Bits open = uncolored;
      for (auto v = open.find_first(); v != Bits::npos; v = open.find_first()) {
        open.reset(v);
        open -= compatible_[v];
        uncolored.reset(v);
        order.push_back(static_cast<Vertex>(v));
        bound.push_back(classes);
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current_.size() + bound[i] <= best_.size()) return;
      const Vertex v = order[i];
      current_.push_back(v);
      Bits next = candidates & compatible_[v];
      if (next.none()) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(std::move(next));
      }
      current_.pop_back();
      candidates.reset(v);
    }
  }

  std::size_t n_;
  std::vector<Bits> compatible_;
  std::vector<Vertex> current_;
  std::vector<Vertex> best_;
};

}  // namespace

VertexSet maximum_independent_set(const Graph& g) { return IndependentSetSearch(g).run(); }

std::size_t independence_number(const Graph& g) { return maximum_independent_set(g).size(); }

std::size_t claw_number(const Graph& g) {
  std::size_t best = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) <= best) continue;
    const auto sub = induced_subgraph(g, g.neighbors(v));
    best = std::max(best, independence_number(sub.graph));
  }
  return best;
}

}  // namespace cfcolor
