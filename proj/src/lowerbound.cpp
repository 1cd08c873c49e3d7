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

#include "cfcolor/lowerbound.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cfcolor/oracle.hpp"
#include "cfcolor/rng.hpp"

namespace cfcolor {

double LayerMeta::layer_weight(std::size_t i) const { return std::pow(1.0 - eps0, static_cast<double>(i)); }

LayerMeta layered_meta(std::size_t n, double eps) {
  if (n < 3) throw ParameterError("n", "must be at least 3");
  if (!(eps > 0.0 && eps < 0.003)) throw ParameterError("eps", "must lie in (0, 0.003)");
  LayerMeta m;
  m.n = n;
  m.eps = eps;
  m.eps0 = eps / 3.0;
  const double ln_n = std::log(static_cast<double>(n));
  m.layers = static_cast<std::size_t>(std::floor(ln_n));
  m.r_colors = static_cast<std::size_t>(std::floor(m.eps0 * m.eps0 * m.eps0 * ln_n * ln_n));

  const std::size_t base = n / m.layers;
  m.layer_sizes.assign(m.layers, base);
  m.layer_sizes.back() += n - base * m.layers;
  m.layer.reserve(n);
  m.weight.reserve(n);
  for (std::size_t i = 1; i <= m.layers; ++i) {
    const double w = m.layer_weight(i);
    for (std::size_t k = 0; k < m.layer_sizes[i - 1]; ++k) {
      m.layer.push_back(i);
      m.weight.push_back(w);
    }
  }
  return m;
}

std::pair<Graph, LayerMeta> generate_layered(const LayeredParams& p) {
  LayerMeta meta = layered_meta(p.n, p.eps);
  Rng rng(p.seed);
  std::vector<Edge> edges;
  for (Vertex x = 0; x < p.n; ++x)
    for (Vertex y = x + 1; y < p.n; ++y)
      if (rng.bernoulli(meta.weight[x] * meta.weight[y])) edges.emplace_back(x, y);
  return {Graph(p.n, edges), std::move(meta)};
}

double set_weight(const LayerMeta& meta, const VertexSet& s) {
  double total = 0.0;
  for (Vertex v : s) total += meta.weight.at(v);
  return total;
}

VertexSet unique_neighbor_set(const Graph& g, const VertexSet& s) {
  std::vector<char> in_s(g.num_vertices(), 0);
  for (Vertex v : s) in_s.at(v) = 1;
  std::vector<std::size_t> hits(g.num_vertices(), 0);
  for (Vertex v : s)
    for (Vertex w : g.neighbors(v)) ++hits[w];
  VertexSet out;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (!in_s[v] && hits[v] == 1) out.push_back(v);
  return out;
}

SetClass classify_set(const LayerMeta& meta, const VertexSet& s) {
  return set_weight(meta, s) > std::sqrt(static_cast<double>(meta.n)) ? SetClass::heavy : SetClass::light;
}

std::vector<double> expected_degrees(const LayerMeta& meta) {
  std::vector<double> per_layer(meta.layers, 0.0);
  for (std::size_t i = 1; i <= meta.layers; ++i) {
    double mu = 0.0;
    for (std::size_t j = 1; j <= meta.layers; ++j) {
      const double count = static_cast<double>(meta.layer_sizes[j - 1]) - (i == j ? 1.0 : 0.0);
      mu += count * meta.layer_weight(i) * meta.layer_weight(j);
    }
    per_layer[i - 1] = mu;
  }
  std::vector<double> out(meta.n);
  for (std::size_t v = 0; v < meta.n; ++v) out[v] = per_layer[meta.layer[v] - 1];
  return out;
}

DegreeReport degree_report(const Graph& g, const LayerMeta& meta, double alpha) {
  if (g.num_vertices() != meta.n) throw ParameterError("meta", "vertex count differs from the graph");
  if (!(alpha > 0.0 && alpha < 1.0)) throw ParameterError("alpha", "must lie in (0, 1)");
  DegreeReport rep;
  rep.alpha = alpha;
  const auto mu = expected_degrees(meta);
  rep.layers.resize(meta.layers);
  for (std::size_t i = 0; i < meta.layers; ++i) {
    rep.layers[i].layer = i + 1;
    rep.layers[i].size = meta.layer_sizes[i];
    rep.layers[i].weight = meta.layer_weight(i + 1);
    rep.layers[i].min_degree = g.num_vertices();
  }
  rep.min_degree = g.num_vertices();
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const std::size_t d = g.degree(v);
    auto& st = rep.layers[meta.layer[v] - 1];
    st.expected_degree = mu[v];
    st.mean_degree += static_cast<double>(d);
    st.min_degree = std::min(st.min_degree, d);
    st.max_degree = std::max(st.max_degree, d);
    if (std::abs(static_cast<double>(d) - mu[v]) >= alpha * mu[v]) {
      rep.flagged.push_back(v);
      ++st.flagged;
    }
    if (d > rep.max_degree || v == 0) {
      rep.max_degree = d;
      rep.max_degree_vertex = v;
    }
    if (d < rep.min_degree) {
      rep.min_degree = d;
      rep.min_degree_vertex = v;
    }
  }
  for (auto& st : rep.layers)
    if (st.size > 0) st.mean_degree /= static_cast<double>(st.size);
  rep.max_degree_layer = meta.layer[rep.max_degree_vertex];
  rep.min_degree_layer = meta.layer[rep.min_degree_vertex];
  rep.ratio = rep.max_degree == 0 ? 0.0
                                  : static_cast<double>(rep.min_degree) /
                                        std::pow(static_cast<double>(rep.max_degree), 1.0 - meta.eps);
  return rep;
}

VertexSet not_taken_care_of(const Graph& g, const Coloring& f) {
  if (f.size() != g.num_vertices()) throw ParameterError("coloring", "size differs from the graph");
  VertexSet out;
  std::vector<std::size_t> count(g.num_vertices() + 1, 0);
  std::vector<Color> seen;
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    seen.clear();
    auto add = [&](Vertex w) {
      if (f.is_blank(w)) return;
      const Color c = f[w];
      if (c >= count.size()) count.resize(c + 1, 0);
      if (count[c]++ == 0) seen.push_back(c);
    };
    add(x);
    for (Vertex w : g.neighbors(x)) add(w);
    bool covered = false;
    for (Color c : seen) {
      covered = covered || count[c] == 1;
      count[c] = 0;
    }
    if (!covered) out.push_back(x);
  }
  return out;
}

TakecareReport takecare_probe(const Graph& g, std::size_t r, std::size_t trials, std::uint64_t seed) {
  if (r == 0) throw ParameterError("r", "must be positive");
  if (trials == 0) throw ParameterError("trials", "must be positive");
  TakecareReport rep;
  rep.r = r;
  rep.trials = trials;
  rep.min_uncovered = g.num_vertices();
  std::size_t total = 0;
  Coloring f(g.num_vertices());
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, t));
    for (Vertex v = 0; v < g.num_vertices(); ++v) f.set(v, static_cast<Color>(rng.below(r) + 1));
    const std::size_t miss = not_taken_care_of(g, f).size();
    total += miss;
    rep.min_uncovered = std::min(rep.min_uncovered, miss);
  }
  rep.mean_uncovered = static_cast<double>(total) / static_cast<double>(trials);
  if (g.num_vertices() <= 14) rep.chi_cn = chi_cn_exact(g);
  return rep;
}

double take_care_probability(const LayerMeta& meta, Vertex x, const VertexSet& s) {
  const double wx = meta.weight.at(x);
  double total = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    double term = meta.weight.at(s[i]) * wx;
    for (std::size_t j = 0; j < s.size(); ++j)
      if (j != i) term *= 1.0 - meta.weight.at(s[j]) * wx;
    total += term;
  }
  return total;
}

double f_eps0(double eps0) { return std::exp(eps0) * std::log(1.0 / (1.0 - std::exp(-eps0))); }

namespace {

VertexSet random_subset(Rng& rng, std::size_t n, std::size_t size) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = 0; i < size && i + 1 < n; ++i) std::swap(perm[i], perm[i + rng.below(n - i)]);
  perm.resize(size);
  std::sort(perm.begin(), perm.end());
  return perm;
}

}  // namespace

SetDiagnostics set_diagnostics(const Graph& g, const LayerMeta& meta, std::size_t samples, std::uint64_t seed) {
  SetDiagnostics d;
  const std::size_t n = meta.n;
  const double nd = static_cast<double>(n);
  const double root = std::sqrt(nd);
  Rng rng(seed);

  if (n <= 60) d.independence_number = independence_number(g);
  d.independence_target = std::pow(nd, 0.003);

  d.min_weight = *std::min_element(meta.weight.begin(), meta.weight.end());
  d.weight_floor = std::pow(nd, -2.0 * meta.eps0);

  // Sizes above sqrt(n) / min weight are always heavy.
  const auto heavy_from = std::min<std::size_t>(n, static_cast<std::size_t>(std::floor(root / d.min_weight)) + 1);
  d.heavy_target = std::pow(nd, 0.6);
  d.heavy_min_unique = n;
  for (std::size_t t = 0; t < samples; ++t) {
    const std::size_t size = heavy_from + rng.below(n - heavy_from + 1);
    const auto s = random_subset(rng, n, size);
    if (classify_set(meta, s) != SetClass::heavy) continue;
    ++d.heavy_samples;
    d.heavy_min_unique = std::min(d.heavy_min_unique, unique_neighbor_set(g, s).size());
  }
  if (d.heavy_samples == 0) d.heavy_min_unique = 0;

  const auto light_cap = static_cast<std::size_t>(std::floor(2.0 * root));
  const double size_bound = std::pow(nd, 0.5 + 2.0 * meta.eps0);
  for (std::size_t t = 0; t < samples; ++t) {
    const auto s = random_subset(rng, n, std::min(n, rng.below(light_cap + 1)));
    if (classify_set(meta, s) != SetClass::light) continue;
    ++d.light_checked;
    if (static_cast<double>(s.size()) >= size_bound) ++d.light_size_violations;
  }

  // Disjoint chunks of floor(sqrt(n)) vertices each weigh less than sqrt(n).
  d.light_sets = std::max<std::size_t>(1, meta.r_colors);
  const auto chunk = static_cast<std::size_t>(std::floor(root));
  d.light_sets = std::min(d.light_sets, n / std::max<std::size_t>(1, chunk));
  const auto pool = random_subset(rng, n, d.light_sets * chunk);
  std::vector<Vertex> order(pool);
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
  std::vector<char> covered(n, 0);
  for (std::size_t i = 0; i < d.light_sets; ++i) {
    VertexSet s(order.begin() + static_cast<std::ptrdiff_t>(i * chunk),
                order.begin() + static_cast<std::ptrdiff_t>((i + 1) * chunk));
    std::sort(s.begin(), s.end());
    for (Vertex v : unique_neighbor_set(g, s)) covered[v] = 1;
  }
  d.light_union = static_cast<std::size_t>(std::count(covered.begin(), covered.end(), 1));
  d.light_target = nd - std::pow(nd, 0.7);
  return d;
}

nlohmann::json to_json(const LayerMeta& meta) {
  return {{"n", meta.n},
          {"eps", meta.eps},
          {"eps0", meta.eps0},
          {"layers", meta.layers},
          {"layer_sizes", meta.layer_sizes},
          {"r_colors", meta.r_colors},
          {"f_eps0", f_eps0(meta.eps0)}};
}

nlohmann::json to_json(const DegreeReport& report) {
  nlohmann::json layers = nlohmann::json::array();
  for (const auto& st : report.layers)
    layers.push_back({{"layer", st.layer},
                      {"size", st.size},
                      {"weight", st.weight},
                      {"expected_degree", st.expected_degree},
                      {"mean_degree", st.mean_degree},
                      {"min_degree", st.min_degree},
                      {"max_degree", st.max_degree},
                      {"flagged", st.flagged}});
  return {{"alpha", report.alpha},
          {"layers", layers},
          {"flagged", report.flagged.size()},
          {"Delta", report.max_degree},
          {"delta", report.min_degree},
          {"Delta_layer", report.max_degree_layer},
          {"delta_layer", report.min_degree_layer},
          {"ratio", report.ratio}};
}

nlohmann::json to_json(const TakecareReport& report) {
  nlohmann::json j = {{"r", report.r},
                      {"trials", report.trials},
                      {"min_uncovered", report.min_uncovered},
                      {"mean_uncovered", report.mean_uncovered}};
  j["chi_cn"] = report.chi_cn ? nlohmann::json(*report.chi_cn) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const SetDiagnostics& d) {
  nlohmann::json j = {{"independence_target", d.independence_target},
                      {"heavy_samples", d.heavy_samples},
                      {"heavy_min_unique", d.heavy_min_unique},
                      {"heavy_target", d.heavy_target},
                      {"light_sets", d.light_sets},
                      {"light_union", d.light_union},
                      {"light_target", d.light_target},
                      {"min_weight", d.min_weight},
                      {"weight_floor", d.weight_floor},
                      {"light_checked", d.light_checked},
                      {"light_size_violations", d.light_size_violations}};
  j["independence_number"] = d.independence_number ? nlohmann::json(*d.independence_number) : nlohmann::json(nullptr);
  return j;
}

}  // namespace cfcolor
