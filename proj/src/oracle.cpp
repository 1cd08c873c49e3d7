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

#include "cfcolor/oracle.hpp"

#include <algorithm>
#include <string>

namespace cfcolor {

namespace {

void require_no_isolated(const Graph& g) {
  if (const auto v = g.first_isolated_vertex())
    throw PreconditionError("vertex " + std::to_string(*v + 1) +
                                " is isolated; open neighborhoods need no isolated vertices",
                            *v);
}

// Per-vertex neighborhood as a plain list, so the search and the verifier do
// not go through the hypergraph code they are checked against.
std::vector<std::vector<Vertex>> neighborhoods(const Graph& g, NeighborhoodMode mode) {
  std::vector<std::vector<Vertex>> out(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const auto nb = g.neighbors(v);
    out[v].assign(nb.begin(), nb.end());
    if (mode == NeighborhoodMode::closed) out[v].push_back(v);
  }
  return out;
}

bool sees_unique_color(const std::vector<Vertex>& hood, const Coloring& f, std::vector<std::size_t>& counts) {
  for (Vertex u : hood)
    if (!f.is_blank(u)) {
      if (f[u] >= counts.size()) counts.resize(f[u] + 1, 0);
      ++counts[f[u]];
    }
  bool found = false;
  for (Vertex u : hood)
    if (!f.is_blank(u) && counts[f[u]] == 1) found = true;
  for (Vertex u : hood)
    if (!f.is_blank(u)) counts[f[u]] = 0;
  return found;
}

class NeighborhoodSearch {
 public:
  NeighborhoodSearch(const Graph& g, NeighborhoodMode mode, Color k)
      : hoods_(neighborhoods(g, mode)), k_(k), f_(g.num_vertices()), counts_(k + 1, 0),
        checks_(g.num_vertices()) {
    // a neighborhood can be judged once its largest member is colored
    for (Vertex w = 0; w < g.num_vertices(); ++w) {
      const Vertex last = *std::max_element(hoods_[w].begin(), hoods_[w].end());
      checks_[last].push_back(w);
    }
  }

  std::optional<Coloring> run() {
    if (f_.size() == 0) return f_;
    if (search(0, 0)) return f_;
    return std::nullopt;
  }

 private:
  bool search(Vertex v, Color used) {
    if (v == f_.size()) return true;
    const Color limit = std::min<Color>(k_, used + 1);
    for (Color c = 1; c <= limit; ++c) {
      f_.set(v, c);
      bool ok = true;
      for (Vertex w : checks_[v])
        if (!sees_unique_color(hoods_[w], f_, counts_)) {
          ok = false;
          break;
        }
      if (ok && search(v + 1, std::max(used, c))) return true;
    }
    f_.clear(v);
    return false;
  }

  std::vector<std::vector<Vertex>> hoods_;
  Color k_;
  Coloring f_;
  std::vector<std::size_t> counts_;
  std::vector<std::vector<Vertex>> checks_;
};

}  // namespace

VerifyReport verify(const Graph& g, const Coloring& f, NeighborhoodMode mode) {
  if (mode == NeighborhoodMode::open) require_no_isolated(g);
  if (f.size() != g.num_vertices())
    throw ParameterError("coloring", "size " + std::to_string(f.size()) + " does not match graph order " +
                                         std::to_string(g.num_vertices()));
  const auto hoods = neighborhoods(g, mode);
  std::vector<std::size_t> counts;
  VerifyReport report;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (!sees_unique_color(hoods[v], f, counts)) report.violating.push_back(v);
  report.ok = report.violating.empty();
  return report;
}

std::optional<Coloring> find_neighborhood_coloring(const Graph& g, NeighborhoodMode mode, Color k) {
  if (k < 1) throw ParameterError("k", "must be at least 1");
  if (mode == NeighborhoodMode::open) require_no_isolated(g);
  return NeighborhoodSearch(g, mode, k).run();
}

namespace {

std::size_t smallest_k(const Graph& g, NeighborhoodMode mode) {
  if (g.num_vertices() == 0) return 0;
  for (Color k = 1;; ++k)
    if (NeighborhoodSearch(g, mode, k).run()) return k;
}

}  // namespace

std::size_t chi_on_exact(const Graph& g) {
  require_no_isolated(g);
  return smallest_k(g, NeighborhoodMode::open);
}

std::size_t chi_cn_exact(const Graph& g) { return smallest_k(g, NeighborhoodMode::closed); }

std::size_t chi_cf_exact(const Hypergraph& h) {
  for (Color k = 1;; ++k)
    if (cf_color_bounded(h, k)) return k;
}

}  // namespace cfcolor
