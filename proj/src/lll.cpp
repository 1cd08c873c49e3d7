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

#include "cfcolor/lll.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cfcolor/rng.hpp"

namespace cfcolor {

namespace {

// Relative slack for comparing integral edge sizes with real thresholds.
constexpr double kSlack = 1e-12;

std::string format_real(double x) {
  std::ostringstream out;
  out.precision(6);
  out << x;
  return out.str();
}

class BadEdgeTracker {
 public:
  BadEdgeTracker(const Hypergraph& h, Color palette) : h_(h), stamp_(palette + 1, 0) {}

  bool is_bad(std::size_t e, const Coloring& f) {
    ++epoch_;
    std::size_t distinct = 0;
    for (Vertex v : h_.edge(e))
      if (stamp_[f[v]] != epoch_) {
        stamp_[f[v]] = epoch_;
        ++distinct;
      }
    return 2 * distinct <= h_.edge(e).size();
  }

 private:
  const Hypergraph& h_;
  std::vector<std::uint64_t> stamp_;
  std::uint64_t epoch_ = 0;
};

}  // namespace

Color lll_palette_size(double ell, double r) {
  return static_cast<Color>(std::ceil(std::numbers::e * ell * r - kSlack));
}

LLLParams make_lll_params(const Hypergraph& h, double ell, double r, std::uint64_t seed) {
  LLLParams p;
  p.ell = ell;
  p.r = r;
  p.gamma = max_edge_intersections(h);
  p.palette_size = std::max<Color>(1, lll_palette_size(ell, r));
  p.max_resample_rounds = 64 * std::max<std::uint64_t>(1, h.num_edges());
  p.seed = seed;
  return p;
}

PreconditionReport check_preconditions(const Hypergraph& h, const LLLParams& p) {
  PreconditionReport report;
  auto fail = [&](std::string message) { report.failures.push_back(std::move(message)); };

  if (!(p.ell >= 1.0)) fail("ell = " + format_real(p.ell) + " must be at least 1");
  if (!(p.r > 0.0)) fail("r = " + format_real(p.r) + " must be positive");
  if (p.max_resample_rounds < 1) fail("max_resample_rounds must be at least 1");
  if (p.palette_size < lll_palette_size(p.ell, p.r))
    fail("palette_size " + std::to_string(p.palette_size) + " below ceil(e*ell*r) = " +
         std::to_string(lll_palette_size(p.ell, p.r)));

  const double upper = p.ell * p.r;
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    const auto size = static_cast<double>(h.edge(i).size());
    if (size < p.r * (1 - kSlack))
      fail("edge " + std::to_string(i) + " has size " + std::to_string(h.edge(i).size()) + " < r = " +
           format_real(p.r));
    else if (size > upper * (1 + kSlack))
      fail("edge " + std::to_string(i) + " has size " + std::to_string(h.edge(i).size()) +
           " > ell*r = " + format_real(upper));
  }

  const std::size_t gamma = max_edge_intersections(h);
  if (gamma > 0) {
    const double need = 2.0 * std::log2(4.0 * static_cast<double>(gamma));
    if (p.r < need * (1 - kSlack))
      fail("r = " + format_real(p.r) + " below 2*log2(4*Gamma) = " + format_real(need) + " (Gamma = " +
           std::to_string(gamma) + ")");
  }
  if (p.gamma < gamma)
    fail("gamma = " + std::to_string(p.gamma) + " below the actual Gamma = " + std::to_string(gamma));

  report.ok = report.failures.empty();
  return report;
}

LLLResult color_near_uniform(const Hypergraph& h, const LLLParams& p) {
  const auto pre = check_preconditions(h, p);
  if (!pre.ok) throw PreconditionError("near-uniform preconditions fail: " + pre.failures.front());

  Rng rng(p.seed);
  auto draw = [&] { return static_cast<Color>(rng.below(p.palette_size)) + 1; };

  Coloring f(h.universe());
  for (Vertex v = 0; v < h.universe(); ++v) f.set(v, draw());

  const auto incidence = h.incidence();
  BadEdgeTracker tracker(h, p.palette_size);
  std::set<std::size_t> bad;
  for (std::size_t e = 0; e < h.num_edges(); ++e)
    if (tracker.is_bad(e, f)) bad.insert(e);

  std::vector<std::uint64_t> touched(h.num_edges(), 0);
  std::uint64_t rounds = 0;
  while (!bad.empty()) {
    if (rounds >= p.max_resample_rounds)
      throw RetryExhausted("resampling cap of " + std::to_string(p.max_resample_rounds) + " rounds reached with " +
                               std::to_string(bad.size()) + " bad edges",
                           rounds, std::vector<std::size_t>(bad.begin(), bad.end()));
    const std::size_t e = *bad.begin();
    ++rounds;
    for (Vertex v : h.edge(e)) f.set(v, draw());
    // only edges sharing a redrawn vertex can change status
    for (Vertex v : h.edge(e))
      for (std::size_t other : incidence[v]) {
        if (touched[other] == rounds) continue;
        touched[other] = rounds;
        if (tracker.is_bad(other, f))
          bad.insert(other);
        else
          bad.erase(other);
      }
  }

  for (std::size_t e = 0; e < h.num_edges(); ++e)
    if (2 * distinct_color_count(h.edge(e), f) <= h.edge(e).size())
      throw std::logic_error("near-uniform coloring left edge " + std::to_string(e) + " with too few colors");
  if (!is_cf_coloring(h, f).ok) throw std::logic_error("near-uniform coloring is not conflict-free");
  return {std::move(f), rounds};
}

}  // namespace cfcolor
