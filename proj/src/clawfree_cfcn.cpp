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

#include "cfcolor/clawfree_cfcn.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace cfcolor {

namespace {

unsigned floor_log2(std::size_t k) { return static_cast<unsigned>(std::bit_width(k) - 1); }

}  // namespace

CfcnParams make_cfcn_params(const Graph& g, std::uint64_t seed) {
  CfcnParams p;
  p.k = std::max<std::size_t>(2, claw_number(g) + 1);
  p.seed = seed;
  return p;
}

VertexSet satisfied_by(const Graph& live, const VertexSet& independent, const VertexSet& chosen) {
  const std::size_t n = live.num_vertices();
  std::vector<char> in_s(n, 0), in_i(n, 0);
  for (Vertex v : independent) in_s[v] = 1;
  for (Vertex v : chosen) in_i[v] = 1;
  VertexSet out = chosen;
  for (Vertex w = 0; w < n; ++w) {
    if (in_s[w]) continue;
    std::size_t hits = 0;
    for (Vertex u : live.neighbors(w)) hits += in_i[u];
    if (hits == 1) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

RoundState sample_trial(const Graph& live, const VertexSet& independent, unsigned exponent, Rng& rng) {
  RoundState state;
  state.exponent = exponent;
  const double keep = std::ldexp(1.0, -static_cast<int>(exponent));
  for (Vertex v : independent)
    if (exponent == 0 || rng.bernoulli(keep)) state.chosen.push_back(v);
  state.satisfied = satisfied_by(live, independent, state.chosen);
  return state;
}

RoundState sample_round(const Graph& live, const VertexSet& independent, const CfcnParams& p, Rng& rng,
                        double* random_fraction_sum) {
  if (live.num_vertices() == 0) throw ParameterError("live", "round needs a nonempty graph");
  const unsigned top = floor_log2(p.k);
  RoundState best = sample_trial(live, independent, 0, rng);
  for (std::size_t t = 1; t < p.trials_per_round; ++t) {
    const auto exponent = static_cast<unsigned>(rng.below(top + 1));
    RoundState trial = sample_trial(live, independent, exponent, rng);
    if (random_fraction_sum)
      *random_fraction_sum +=
          static_cast<double>(trial.satisfied.size()) / static_cast<double>(live.num_vertices());
    if (trial.satisfied.size() > best.satisfied.size()) best = std::move(trial);
  }
  return best;
}

std::size_t cfcn_color_bound(std::size_t n, std::size_t k, double c) {
  if (n == 0) return 0;
  const double rounds = std::log(static_cast<double>(n)) * std::log2(static_cast<double>(k)) / c;
  return static_cast<std::size_t>(std::ceil(rounds)) + 1;
}

CfcnResult color_clawfree_cfcn(const Graph& g, const CfcnParams& p) {
  if (p.k < 2) throw ParameterError("k", "must be at least 2");
  if (p.trials_per_round < 2) throw ParameterError("trials_per_round", "must be at least 2");
  if (!(p.c > 0.0)) throw ParameterError("c", "must be positive");

  const std::size_t n = g.num_vertices();
  CfcnResult result;
  result.coloring = Coloring(n);
  result.color_bound = cfcn_color_bound(n, p.k, p.c);
  if (const auto claw = claw_number(g); claw + 1 > p.k)
    result.warnings.push_back("input is not K_{1,k}-free (claw number " + std::to_string(claw) + ")");

  Rng rng(p.seed);
  VertexSet unsatisfied(n);
  for (Vertex v = 0; v < n; ++v) unsatisfied[v] = v;
  std::vector<Color> satisfied_in(n, kBlank);
  bool degree_warning = false;

  while (!unsatisfied.empty()) {
    if (result.rounds >= n) throw std::logic_error("no progress bound exceeded");
    const auto live = induced_subgraph(g, unsatisfied);
    const auto independent = maximal_independent_set(live.graph);

    RoundRecord record;
    record.live = live.graph.num_vertices();
    record.independent = independent.size();
    {
      std::vector<char> in_s(record.live, 0);
      for (Vertex v : independent) in_s[v] = 1;
      for (Vertex w = 0; w < record.live; ++w) {
        if (in_s[w]) continue;
        std::size_t d = 0;
        for (Vertex u : live.graph.neighbors(w)) d += in_s[u];
        record.max_independent_neighbors = std::max(record.max_independent_neighbors, d);
      }
    }
    if (record.max_independent_neighbors + 1 > p.k && !degree_warning) {
      degree_warning = true;
      result.warnings.push_back("a vertex has " + std::to_string(record.max_independent_neighbors) +
                                " neighbors in one maximal independent set (more than k - 1)");
    }

    double fraction_sum = 0.0;
    const RoundState state = sample_round(live.graph, independent, p, rng, &fraction_sum);
    if (state.satisfied.size() < std::max<std::size_t>(1, independent.size()))
      throw std::logic_error("round made less progress than its independent set");

    const auto color = static_cast<Color>(result.rounds + 1);
    for (Vertex v : state.chosen) result.coloring.set(live.to_parent[v], color);
    std::vector<char> done(record.live, 0);
    for (Vertex v : state.satisfied) {
      done[v] = 1;
      satisfied_in[live.to_parent[v]] = color;
    }
    VertexSet next;
    for (Vertex v = 0; v < record.live; ++v)
      if (!done[v]) next.push_back(live.to_parent[v]);
    if (next.size() >= unsatisfied.size()) throw std::logic_error("unsatisfied set did not shrink");
    unsatisfied = std::move(next);

    record.exponent = state.exponent;
    record.chosen = state.chosen.size();
    record.satisfied = state.satisfied.size();
    record.color = color;
    record.random_fraction = fraction_sum / static_cast<double>(p.trials_per_round - 1);
    result.history.push_back(record);
    ++result.rounds;
  }

  result.leftover_vertices = result.coloring.blank_count();
  if (result.leftover_vertices > 0) {
    const auto leftover = static_cast<Color>(result.rounds + 1);
    for (Vertex v = 0; v < n; ++v)
      if (result.coloring.is_blank(v)) result.coloring.set(v, leftover);
  }

  // the round color that satisfied v must be unique in N[v] of the final coloring
  for (Vertex v = 0; v < n; ++v) {
    const Color c = satisfied_in[v];
    std::size_t hits = result.coloring[v] == c ? 1 : 0;
    for (Vertex w : g.neighbors(v)) hits += result.coloring[w] == c ? 1 : 0;
    if (hits != 1)
      throw std::logic_error("vertex " + std::to_string(v + 1) + " lost its round-" + std::to_string(c) + " witness");
  }
  result.colors_used = result.coloring.num_colors();
  return result;
}

}  // namespace cfcolor
