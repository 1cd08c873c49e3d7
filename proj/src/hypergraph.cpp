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

#include "cfcolor/hypergraph.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <string>

namespace cfcolor {

Hypergraph::Hypergraph(std::size_t universe, std::vector<VertexSet> edges)
    : universe_(universe), edges_(std::move(edges)) {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    auto& e = edges_[i];
    if (e.empty()) throw ParameterError("edges", "edge " + std::to_string(i) + " is empty");
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    if (e.back() >= universe_)
      throw ParameterError("edges", "edge " + std::to_string(i) + " has member " +
                                        std::to_string(e.back()) + " outside universe " +
                                        std::to_string(universe_));
  }
}

std::vector<std::size_t> Hypergraph::degrees() const {
  std::vector<std::size_t> deg(universe_, 0);
  for (const auto& e : edges_)
    for (Vertex v : e) ++deg[v];
  return deg;
}

std::vector<std::vector<std::size_t>> Hypergraph::incidence() const {
  std::vector<std::vector<std::size_t>> inc(universe_);
  for (std::size_t i = 0; i < edges_.size(); ++i)
    for (Vertex v : edges_[i]) inc[v].push_back(i);
  return inc;
}

std::size_t Hypergraph::duplicate_edge_count() const {
  std::vector<VertexSet> sorted(edges_.begin(), edges_.end());
  std::sort(sorted.begin(), sorted.end());
  std::size_t dup = 0;
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i] == sorted[i - 1]) ++dup;
  return dup;
}

std::size_t hyper_max_degree(const Hypergraph& h) {
  const auto deg = h.degrees();
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

std::size_t max_edge_intersections(const Hypergraph& h) {
  using Bits = boost::dynamic_bitset<std::uint64_t>;
  const std::size_t m = h.num_edges();
  if (m == 0) return 0;
  std::vector<Bits> incident(h.universe(), Bits(m));
  for (std::size_t i = 0; i < m; ++i)
    for (Vertex v : h.edge(i)) incident[v].set(i);
  std::size_t best = 0;
  Bits meets(m);
  for (std::size_t i = 0; i < m; ++i) {
    meets.reset();
    for (Vertex v : h.edge(i)) meets |= incident[v];
    best = std::max(best, meets.count() - 1);
  }
  return best;
}

std::size_t distinct_color_count(std::span<const Vertex> members, const Coloring& f) {
  std::vector<Color> seen;
  seen.reserve(members.size());
  for (Vertex v : members)
    if (!f.is_blank(v)) seen.push_back(f[v]);
  std::sort(seen.begin(), seen.end());
  return static_cast<std::size_t>(std::unique(seen.begin(), seen.end()) - seen.begin());
}

namespace {

bool has_unique_color(std::span<const Vertex> members, const Coloring& f) {
  std::vector<Color> seen;
  seen.reserve(members.size());
  for (Vertex v : members)
    if (!f.is_blank(v)) seen.push_back(f[v]);
  std::sort(seen.begin(), seen.end());
  for (std::size_t i = 0; i < seen.size();) {
    std::size_t j = i;
    while (j < seen.size() && seen[j] == seen[i]) ++j;
    if (j - i == 1) return true;
    i = j;
  }
  return false;
}

// Fail-first backtracking: vertices by descending degree, colors ascending,
// and a new color only ever one above the largest used so far.
class CfSearch {
 public:
  CfSearch(const Hypergraph& h, Color kmax) : h_(h), incidence_(h.incidence()) {
    const auto deg = h.degrees();
    for (Vertex v = 0; v < h.universe(); ++v)
      if (deg[v] > 0) order_.push_back(v);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return deg[a] > deg[b]; });
    kmax_ = static_cast<Color>(std::min<std::size_t>(kmax, order_.size()));
    stride_ = static_cast<std::size_t>(kmax_) + 1;
    remaining_.resize(h.num_edges());
    for (std::size_t e = 0; e < h.num_edges(); ++e)
      remaining_[e] = static_cast<std::uint32_t>(h.edge(e).size());
    uniques_.assign(h.num_edges(), 0);
    counts_.assign(h.num_edges() * stride_, 0);
    coloring_ = Coloring(h.universe(), 1);
  }

  std::optional<Coloring> run() {
    if (order_.empty()) return coloring_;
    if (kmax_ == 0) return std::nullopt;
    if (!search(0, 0)) return std::nullopt;
    return coloring_;
  }

 private:
  // Applies v := c and reports whether every edge it completes is satisfied.
  bool place(Vertex v, Color c) {
    bool ok = true;
    for (std::size_t e : incidence_[v]) {
      auto& count = counts_[e * stride_ + c];
      ++count;
      if (count == 1)
        ++uniques_[e];
      else if (count == 2)
        --uniques_[e];
      if (--remaining_[e] == 0 && uniques_[e] == 0) ok = false;
    }
    coloring_.set(v, c);
    return ok;
  }

  void unplace(Vertex v, Color c) {
    for (std::size_t e : incidence_[v]) {
      auto& count = counts_[e * stride_ + c];
      --count;
      if (count == 0)
        --uniques_[e];
      else if (count == 1)
        ++uniques_[e];
      ++remaining_[e];
    }
    coloring_.set(v, 1);
  }

  bool search(std::size_t index, Color used) {
    if (index == order_.size()) return true;
    const Vertex v = order_[index];
    const Color limit = std::min<Color>(kmax_, used + 1);
    for (Color c = 1; c <= limit; ++c) {
      const bool ok = place(v, c);
      if (ok && search(index + 1, std::max(used, c))) return true;
      unplace(v, c);
    }
    return false;
  }

  const Hypergraph& h_;
  std::vector<std::vector<std::size_t>> incidence_;
  std::vector<Vertex> order_;
  Color kmax_ = 0;
  std::size_t stride_ = 1;
  std::vector<std::uint32_t> remaining_;
  std::vector<std::uint32_t> uniques_;
  std::vector<std::uint32_t> counts_;
  Coloring coloring_;
};

}  // namespace

CfReport is_cf_coloring(const Hypergraph& h, const Coloring& f) {
  if (f.size() != h.universe())
    throw ParameterError("coloring", "size " + std::to_string(f.size()) + " does not match universe " +
                                         std::to_string(h.universe()));
  CfReport report;
  for (std::size_t i = 0; i < h.num_edges(); ++i)
    if (!has_unique_color(h.edge(i), f)) report.violating_edges.push_back(i);
  report.ok = report.violating_edges.empty();
  return report;
}

std::optional<Coloring> cf_color_bounded(const Hypergraph& h, Color kmax) {
  if (kmax < 1) throw ParameterError("kmax", "must be at least 1");
  return CfSearch(h, kmax).run();
}

Hypergraph neighborhood_hypergraph(const Graph& g, NeighborhoodMode mode) {
  std::vector<VertexSet> edges;
  edges.reserve(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const auto nb = g.neighbors(v);
    VertexSet e(nb.begin(), nb.end());
    if (mode == NeighborhoodMode::closed) {
      e.insert(std::lower_bound(e.begin(), e.end(), v), v);
    } else if (e.empty()) {
      throw PreconditionError("vertex " + std::to_string(v + 1) +
                                  " is isolated; open neighborhoods need no isolated vertices",
                              v);
    }
    edges.push_back(std::move(e));
  }
  return Hypergraph(g.num_vertices(), std::move(edges));
}

}  // namespace cfcolor
