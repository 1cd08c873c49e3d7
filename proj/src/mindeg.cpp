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

#include "cfcolor/mindeg.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include "cfcolor/hypergraph.hpp"
#include "cfcolor/lll.hpp"
#include "cfcolor/oracle.hpp"
#include "cfcolor/rng.hpp"

namespace cfcolor {

MinDegParams make_mindeg_params(const Graph& g, double c, double eps, std::uint64_t seed, DegreePolicy policy) {
  if (!(c > 0.0)) throw ParameterError("c", "must be positive");
  if (!(eps >= 0.0 && eps <= 1.0)) throw ParameterError("eps", "must lie in [0, 1]");
  if (g.max_degree() < 2) throw ParameterError("graph", "maximum degree must be at least 2");

  MinDegParams p;
  p.c = c;
  p.eps = eps;
  p.max_degree = g.max_degree();
  p.seed = seed;
  p.policy = policy;
  const double delta = static_cast<double>(p.max_degree);
  const double l2 = std::log(2.0 * delta);
  const double l2_pow = std::pow(l2, 1.0 + eps);
  p.sample_prob = std::min(1.0, 144.0 * l2_pow / (c * delta));
  p.window_lo = 108.0 * l2;
  p.window_hi = 180.0 / c * l2_pow;
  if (!(p.window_lo < p.window_hi))
    throw ParameterError("c", "window (108 ln 2D, 180/c ln^{1+eps} 2D) is empty");
  p.max_resample_rounds = 64 * std::max<std::uint64_t>(1, g.num_vertices());
  return p;
}

double min_degree_requirement(const MinDegParams& p) {
  const double delta = static_cast<double>(p.max_degree);
  return p.c * delta / std::pow(std::log(delta), p.eps);
}

bool in_window(std::size_t count, const MinDegParams& p) {
  const auto x = static_cast<double>(count);
  return p.window_lo < x && x < p.window_hi;
}

namespace {

class WindowSampler {
 public:
  WindowSampler(const Graph& g, const MinDegParams& p) : g_(g), p_(p), rng_(p.seed) {}

  WindowSample run() {
    WindowSample out;
    const std::size_t n = g_.num_vertices();
    in_a_.assign(n, 0);
    counts_.assign(n, 0);
    redraw_all();

    std::uint64_t local = 0;
    const std::uint64_t restart_every = std::max<std::uint64_t>(1, p_.max_resample_rounds / 2);
    while (!bad_.empty()) {
      if (out.rounds >= p_.max_resample_rounds || !can_change())
        throw RetryExhausted("window sampling stopped after " + std::to_string(out.rounds) + " rounds with " +
                                 std::to_string(bad_.size()) + " vertices outside the window",
                             out.rounds, std::vector<std::size_t>(bad_.begin(), bad_.end()));
      if (local == restart_every) {
        redraw_all();
        ++out.restarts;
        local = 0;
        continue;
      }
      const Vertex v = *bad_.begin();
      for (Vertex u : g_.neighbors(v)) set_member(u, rng_.bernoulli(p_.sample_prob));
      ++out.rounds;
      ++local;
    }
    for (Vertex v = 0; v < n; ++v)
      if (in_a_[v]) out.A.push_back(v);
    out.counts = counts_;
    return out;
  }

 private:
  // With probability 1 (or 0) a redraw reproduces the same set.
  bool can_change() const { return p_.sample_prob > 0.0 && p_.sample_prob < 1.0; }

  void redraw_all() {
    std::fill(counts_.begin(), counts_.end(), 0);
    for (Vertex v = 0; v < g_.num_vertices(); ++v) in_a_[v] = rng_.bernoulli(p_.sample_prob) ? 1 : 0;
    for (Vertex v = 0; v < g_.num_vertices(); ++v)
      if (in_a_[v])
        for (Vertex w : g_.neighbors(v)) ++counts_[w];
    bad_.clear();
    for (Vertex v = 0; v < g_.num_vertices(); ++v)
      if (!in_window(counts_[v], p_)) bad_.insert(v);
  }

  void set_member(Vertex u, bool member) {
    if ((in_a_[u] != 0) == member) return;
    in_a_[u] = member ? 1 : 0;
    for (Vertex w : g_.neighbors(u)) {
      member ? ++counts_[w] : --counts_[w];
      if (in_window(counts_[w], p_))
        bad_.erase(w);
      else
        bad_.insert(w);
    }
  }

  const Graph& g_;
  const MinDegParams& p_;
  Rng rng_;
  std::vector<char> in_a_;
  std::vector<std::size_t> counts_;
  std::set<Vertex> bad_;
};

}  // namespace

WindowSample sample_window_set(const Graph& g, const MinDegParams& p) {
  if (g.max_degree() != p.max_degree) throw ParameterError("params", "built for a different maximum degree");
  const double need = min_degree_requirement(p);
  VertexSet low;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (static_cast<double>(g.degree(v)) < need) low.push_back(v);
  if (!low.empty() && p.policy == DegreePolicy::enforce)
    throw PreconditionError("vertex " + std::to_string(low.front() + 1) + " has degree " +
                                std::to_string(g.degree(low.front())) + " below c*Delta/ln^eps(Delta) = " +
                                std::to_string(need),
                            low.front());
  auto sample = WindowSampler(g, p).run();
  sample.low_degree = std::move(low);
  return sample;
}

std::size_t mindeg_color_bound(const MinDegParams& p) {
  const double l2 = std::log(2.0 * static_cast<double>(p.max_degree));
  return static_cast<std::size_t>(std::ceil(490.0 / p.c * std::pow(l2, 1.0 + p.eps))) + 1;
}

MinDegResult color_mindeg_cfon(const Graph& g, const MinDegParams& p) {
  MinDegResult result;
  result.color_bound = mindeg_color_bound(p);
  const double l2 = std::log(2.0 * static_cast<double>(p.max_degree));
  result.r = 108.0 * l2;
  result.ell = 5.0 / (3.0 * p.c) * std::pow(l2, p.eps);

  auto exact_fallback = [&] {
    const auto h = neighborhood_hypergraph(g, NeighborhoodMode::open);
    auto f = cf_color_bounded(h, static_cast<Color>(hyper_max_degree(h) + 1));
    if (!f) throw std::logic_error("bounded search failed at max degree + 1");
    result.coloring = std::move(*f);
    result.fallback = true;
  };

  try {
    result.sample = sample_window_set(g, p);
  } catch (const RetryExhausted&) {
    exact_fallback();
  }

  if (!result.fallback) {
    const auto& A = result.sample.A;
    std::vector<Vertex> local(g.num_vertices(), 0);
    for (Vertex i = 0; i < A.size(); ++i) local[A[i]] = i;
    std::vector<char> in_a(g.num_vertices(), 0);
    for (Vertex v : A) in_a[v] = 1;
    std::vector<VertexSet> edges;
    edges.reserve(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      VertexSet e;
      for (Vertex w : g.neighbors(v))
        if (in_a[w]) e.push_back(local[w]);
      edges.push_back(std::move(e));
    }
    const Hypergraph h(A.size(), std::move(edges));
    const auto params = make_lll_params(h, result.ell, result.r, derive_seed(p.seed, 2));
    try {
      auto lll = color_near_uniform(h, params);
      result.lll_rounds = lll.rounds;
      const auto dense = compress_colors(lll.coloring.values());
      const Color fresh = *std::max_element(dense.begin(), dense.end()) + 1;
      result.coloring = Coloring(g.num_vertices(), fresh);
      for (Vertex i = 0; i < A.size(); ++i) result.coloring.set(A[i], dense[i]);
    } catch (const RetryExhausted&) {
      exact_fallback();
    }
  }

  if (!verify(g, result.coloring, NeighborhoodMode::open).ok)
    throw std::logic_error("min-degree coloring failed verification");
  result.colors_used = result.coloring.num_colors();
  return result;
}

}  // namespace cfcolor
