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

#include "cfcolor/clawfree_cfon.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cfcolor/lll.hpp"
#include "cfcolor/oracle.hpp"
#include "cfcolor/rng.hpp"

namespace cfcolor {

namespace {

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet intersect_neighbors(const Graph& g, Vertex v, const std::vector<char>& member) {
  VertexSet out;
  for (Vertex w : g.neighbors(v))
    if (member[w]) out.push_back(w);
  return out;
}

std::vector<char> membership(std::size_t n, const VertexSet& set) {
  std::vector<char> in(n, 0);
  for (Vertex v : set) in[v] = 1;
  return in;
}

StageHypergraph make_stage(const Graph& g, std::string name, const VertexSet& vertex_pool,
                           const VertexSet& served_pool) {
  StageHypergraph stage;
  stage.name = std::move(name);
  const auto member = membership(g.num_vertices(), vertex_pool);
  std::vector<VertexSet> global_edges;
  for (Vertex v : served_pool) {
    auto e = intersect_neighbors(g, v, member);
    if (e.empty()) {
      stage.unserved.push_back(v);
      continue;
    }
    stage.served.push_back(v);
    global_edges.push_back(std::move(e));
  }
  for (const auto& e : global_edges) stage.vertices = set_union(stage.vertices, e);

  std::vector<Vertex> local(g.num_vertices(), 0);
  for (Vertex i = 0; i < stage.vertices.size(); ++i) local[stage.vertices[i]] = i;
  for (auto& e : global_edges)
    for (auto& v : e) v = local[v];
  stage.hypergraph = Hypergraph(stage.vertices.size(), std::move(global_edges));
  return stage;
}

Decomposition decompose_with_claw(const Graph& g, std::size_t k, std::size_t claw) {
  if (k < 2) throw ParameterError("k", "must be at least 2");
  if (const auto v = g.first_isolated_vertex())
    throw PreconditionError("vertex " + std::to_string(*v + 1) + " is isolated", *v);
  if (g.max_degree() < 2) throw PreconditionError("maximum degree must be at least 2");

  const std::size_t n = g.num_vertices();
  Decomposition d;
  d.k = k;
  d.max_degree = g.max_degree();
  d.log_max_degree = std::log(static_cast<double>(d.max_degree));
  d.claw_number = claw;
  d.k_claw_free = claw < k;

  d.A = maximal_independent_set(g);
  const double threshold = static_cast<double>(k) * d.log_max_degree;
  for (Vertex v : d.A) (static_cast<double>(g.degree(v)) <= threshold ? d.A1 : d.A2).push_back(v);
  for (Vertex v : d.A1) {
    const auto nb = g.neighbors(v);
    d.X = set_union(d.X, VertexSet(nb.begin(), nb.end()));
  }

  const auto in_a = membership(n, d.A);
  const auto in_x = membership(n, d.X);
  VertexSet rest;
  for (Vertex v = 0; v < n; ++v)
    if (!in_a[v] && !in_x[v]) rest.push_back(v);
  d.gprime = induced_subgraph(g, rest);

  const Coloring proper = greedy_proper_coloring(d.gprime.graph);
  d.classes.assign(proper.max_color(), {});
  for (Vertex i = 0; i < proper.size(); ++i) d.classes[proper[i] - 1].push_back(d.gprime.to_parent[i]);
  normalize_classes(g, d.classes);

  const auto cap = static_cast<std::size_t>(std::ceil(12.0 * d.log_max_degree));
  d.b_classes = std::min(d.classes.size(), cap);
  for (std::size_t i = 0; i < d.classes.size(); ++i)
    (i < d.b_classes ? d.B : d.C).insert((i < d.b_classes ? d.B : d.C).end(), d.classes[i].begin(),
                                         d.classes[i].end());
  std::sort(d.B.begin(), d.B.end());
  std::sort(d.C.begin(), d.C.end());

  for (Vertex v : d.A) {
    const auto nb = g.neighbors(v);
    const bool touches_x = std::any_of(nb.begin(), nb.end(), [&](Vertex w) { return in_x[w] != 0; });
    (touches_x ? d.AX : d.AXbar).push_back(v);
  }

  if (d.k_claw_free) {
    // each class is independent, so k neighbors in one class would be an induced K_{1,k}
    std::vector<std::size_t> class_of(n, d.classes.size());
    for (std::size_t i = 0; i < d.classes.size(); ++i)
      for (Vertex v : d.classes[i]) class_of[v] = i;
    std::vector<std::size_t> hits(d.classes.size() + 1, 0);
    for (Vertex v = 0; v < n; ++v) {
      for (Vertex w : g.neighbors(v)) ++hits[class_of[w]];
      for (Vertex w : g.neighbors(v)) {
        if (class_of[w] < d.classes.size() && hits[class_of[w]] >= k)
          throw std::logic_error("vertex " + std::to_string(v + 1) + " has k neighbors in one color class");
      }
      for (Vertex w : g.neighbors(v)) hits[class_of[w]] = 0;
    }
  }
  return d;
}

}  // namespace

void normalize_classes(const Graph& g, std::vector<VertexSet>& classes) {
  const std::size_t n = g.num_vertices();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> class_of(n, kNone);
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (Vertex v : classes[i]) class_of[v] = i;

  std::vector<char> neighbor_class(classes.size(), 0);
  for (bool moved = true; moved;) {
    moved = false;
    for (std::size_t i = 1; i < classes.size(); ++i) {
      const VertexSet snapshot = classes[i];
      for (Vertex v : snapshot) {
        for (Vertex w : g.neighbors(v))
          if (class_of[w] != kNone) neighbor_class[class_of[w]] = 1;
        std::size_t target = kNone;
        for (std::size_t j = 0; j < i; ++j)
          if (!neighbor_class[j]) {
            target = j;
            break;
          }
        for (Vertex w : g.neighbors(v))
          if (class_of[w] != kNone) neighbor_class[class_of[w]] = 0;
        if (target == kNone) continue;
        auto& from = classes[i];
        from.erase(std::lower_bound(from.begin(), from.end(), v));
        auto& to = classes[target];
        to.insert(std::lower_bound(to.begin(), to.end(), v), v);
        class_of[v] = target;
        moved = true;
      }
    }
  }
  while (!classes.empty() && classes.back().empty()) classes.pop_back();
  for (const auto& c : classes)
    if (c.empty()) throw std::logic_error("empty color class below a nonempty one after normalization");
}

Decomposition decompose(const Graph& g, std::size_t k) { return decompose_with_claw(g, k, claw_number(g)); }

std::array<StageHypergraph, 5> build_hypergraphs(const Graph& g, const Decomposition& d) {
  return {
      make_stage(g, "H1", d.C.empty() ? VertexSet{} : d.B, d.C),
      make_stage(g, "H2", d.A2, d.B),
      make_stage(g, "H3", d.A1, d.X),
      make_stage(g, "H4", d.X, d.AX),
      make_stage(g, "H5", d.C, d.AXbar),
  };
}

double cfon_budget(std::size_t k, std::size_t max_degree) {
  const double kk = static_cast<double>(k);
  return 46.0 * kk * std::log(static_cast<double>(max_degree)) + 2.0 * kk + 3.0;
}

UnsatisfiedVertices::UnsatisfiedVertices(std::vector<Vertex> vertices)
    : Error([&] {
        std::string message = "vertices without a uniquely colored neighbor:";
        for (Vertex v : vertices) message += " " + std::to_string(v + 1);
        return message;
      }()),
      vertices_(std::move(vertices)) {}

std::vector<Repair> repair_open_coloring(const Graph& g, Coloring& f, const VertexSet& unsatisfied,
                                         Color next_color) {
  const std::size_t n = g.num_vertices();
  std::vector<char> pending(n, 0);
  for (Vertex v : unsatisfied) pending[v] = 1;
  std::vector<char> recolored(n, 0);
  std::vector<Color> palette;  // repair colors handed out so far
  std::vector<Repair> repairs;

  // A color can go to u if no neighbor of u sees it on another vertex: then it
  // is unique in every open neighborhood containing u.
  auto fits = [&](Vertex u, Color c) {
    for (Vertex w : g.neighbors(u))
      for (Vertex x : g.neighbors(w))
        if (x != u && f[x] == c) return false;
    return true;
  };

  for (Vertex v : unsatisfied) {
    if (!pending[v]) continue;
    Vertex best = 0;
    std::size_t best_gain = 0;
    bool found = false;
    for (Vertex u : g.neighbors(v)) {
      if (recolored[u]) continue;
      const auto nb = g.neighbors(u);
      const auto gain = static_cast<std::size_t>(
          std::count_if(nb.begin(), nb.end(), [&](Vertex w) { return pending[w] != 0; }));
      if (!found || gain > best_gain) {
        best = u;
        best_gain = gain;
        found = true;
      }
    }
    if (!found) throw std::logic_error("repair found no recolorable neighbor of vertex " + std::to_string(v + 1));

    Color chosen = kBlank;
    for (Color c : palette)
      if (fits(best, c)) {
        chosen = c;
        break;
      }
    if (chosen == kBlank) {
      chosen = next_color + static_cast<Color>(palette.size());
      palette.push_back(chosen);
    }
    f.set(best, chosen);
    recolored[best] = 1;
    for (Vertex w : g.neighbors(best)) pending[w] = 0;
    repairs.push_back({v, best, chosen});
  }
  return repairs;
}

CfonResult color_clawfree_cfon(const Graph& g, const CfonOptions& options) {
  if (const auto v = g.first_isolated_vertex())
    throw PreconditionError("vertex " + std::to_string(*v + 1) + " is isolated", *v);
  if (options.k && *options.k < 2) throw ParameterError("k", "must be at least 2");

  const std::size_t claw = claw_number(g);
  const std::size_t k = options.k.value_or(std::max<std::size_t>(2, claw + 1));

  CfonResult result;
  auto& cert = result.certificate;
  cert.k = k;
  cert.max_degree = g.max_degree();
  cert.budget = cfon_budget(k, cert.max_degree);
  if (claw >= k) cert.notes.push_back("input is not K_{1,k}-free (claw number " + std::to_string(claw) + ")");

  const std::size_t n = g.num_vertices();
  if (cert.max_degree <= 1) {
    // disjoint edges: each vertex's only neighbor is unique under one color
    result.coloring = Coloring(n, 1);
    cert.stages.push_back({"matching", "direct", n, 0, 0, n > 0 ? 1u : 0u, 0});
    cert.total = n > 0 ? 1 : 0;
    cert.notes.push_back("maximum degree below 2; colored directly");
    return result;
  }

  const Decomposition d = decompose_with_claw(g, k, claw);
  const auto stages = build_hypergraphs(g, d);
  Coloring& f = result.coloring;
  f = Coloring(n);
  Color offset = 0;

  for (std::size_t i = 0; i < stages.size(); ++i) {
    const auto& stage = stages[i];
    const auto& h = stage.hypergraph;
    StageRecord record{stage.name, "none", h.universe(), h.num_edges(), hyper_max_degree(h), 0, offset};
    if (h.num_edges() == 0) {
      cert.stages.push_back(record);
      continue;
    }

    std::optional<Coloring> local;
    if (i == 0) {
      const auto params = make_lll_params(h, static_cast<double>(k - 1), 12.0 * d.log_max_degree,
                                          derive_seed(options.seed, 1));
      const auto pre = check_preconditions(h, params);
      if (pre.ok) {
        try {
          local = color_near_uniform(h, params).coloring;
          record.method = "lll";
        } catch (const RetryExhausted& e) {
          cert.notes.push_back(stage.name + ": " + e.what() + "; using exact search");
        }
      } else {
        cert.notes.push_back(stage.name + ": near-uniform preconditions fail (" + pre.failures.front() +
                             "); using exact search");
      }
    }
    if (!local) {
      local = cf_color_bounded(h, static_cast<Color>(record.max_degree + 1));
      if (!local) throw std::logic_error(stage.name + ": bounded search failed at max degree + 1");
      record.method = "exact";
    }

    const auto dense = compress_colors(local->values());
    record.colors = *std::max_element(dense.begin(), dense.end());
    for (Vertex j = 0; j < stage.vertices.size(); ++j) {
      const Vertex v = stage.vertices[j];
      if (!f.is_blank(v)) throw std::logic_error("vertex " + std::to_string(v + 1) + " colored in two stages");
      f.set(v, offset + dense[j]);
    }
    offset += static_cast<Color>(record.colors);
    cert.stages.push_back(record);
  }

  if (d.k_claw_free) {
    const auto limit3 = static_cast<std::size_t>(std::floor(static_cast<double>(k) * d.log_max_degree));
    if (cert.stages[2].max_degree > limit3) throw std::logic_error("H3 exceeds its degree bound");
    if (cert.stages[3].max_degree > k - 1 || cert.stages[4].max_degree > k - 1)
      throw std::logic_error("H4/H5 exceed degree k - 1");
  }

  cert.leftover_vertices = f.blank_count();
  if (cert.leftover_vertices > 0) {
    cert.leftover_colors = 1;
    for (Vertex v = 0; v < n; ++v)
      if (f.is_blank(v)) f.set(v, offset + 1);
  }

  const auto report = verify(g, f, NeighborhoodMode::open);
  if (!report.ok) {
    if (!options.fallback) throw UnsatisfiedVertices(report.violating);
    cert.repairs = repair_open_coloring(g, f, report.violating,
                                        offset + static_cast<Color>(cert.leftover_colors) + 1);
    std::vector<Color> used;
    for (const auto& r : cert.repairs) used.push_back(r.color);
    std::sort(used.begin(), used.end());
    cert.repair_colors = static_cast<std::size_t>(std::unique(used.begin(), used.end()) - used.begin());
    if (!verify(g, f, NeighborhoodMode::open).ok) throw std::logic_error("repair left unsatisfied vertices");
  }

  cert.total = offset + cert.leftover_colors + cert.repair_colors;
  return result;
}

nlohmann::json to_json(const PaletteCertificate& cert) {
  nlohmann::json j;
  j["schema"] = 1;
  j["k"] = cert.k;
  j["max_degree"] = cert.max_degree;
  j["stages"] = nlohmann::json::array();
  for (const auto& s : cert.stages)
    j["stages"].push_back({{"name", s.name},
                           {"method", s.method},
                           {"vertices", s.vertices},
                           {"edges", s.edges},
                           {"max_degree", s.max_degree},
                           {"colors", s.colors},
                           {"offset", s.offset}});
  j["leftover"] = {{"vertices", cert.leftover_vertices}, {"colors", cert.leftover_colors}};
  j["repairs"] = nlohmann::json::array();
  for (const auto& r : cert.repairs)
    j["repairs"].push_back({{"unsatisfied", r.unsatisfied + 1}, {"recolored", r.recolored + 1}, {"color", r.color}});
  j["repair_colors"] = cert.repair_colors;
  j["total"] = cert.total;
  j["budget"] = cert.budget;
  j["within_budget"] = cert.within_budget();
  j["notes"] = cert.notes;
  return j;
}

}  // namespace cfcolor
