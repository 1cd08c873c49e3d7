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

#include <cmath>
#include <numbers>

#include "cfcolor/hypergraph.hpp"
#include "cfcolor/lll.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cfcolor;
using namespace cfcolor::testing;

namespace {

Hypergraph disjoint_edges(std::size_t count, std::size_t size) {
  std::vector<VertexSet> edges(count);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < size; ++j) edges[i].push_back(static_cast<Vertex>(i * size + j));
  return Hypergraph(count * size, std::move(edges));
}

// Edges with sizes in [r, ell*r] drawn from a universe of the given size.
Hypergraph random_near_uniform(Rng& rng, std::size_t universe, std::size_t edges, std::size_t r, std::size_t ell) {
  std::vector<VertexSet> es;
  for (std::size_t i = 0; i < edges; ++i) {
    const std::size_t size = r + rng.below(r * ell - r + 1);
    std::vector<char> used(universe, 0);
    VertexSet e;
    while (e.size() < size) {
      const auto v = static_cast<Vertex>(rng.below(universe));
      if (!used[v]) {
        used[v] = 1;
        e.push_back(v);
      }
    }
    es.push_back(std::move(e));
  }
  return Hypergraph(universe, std::move(es));
}

void check_strong(const Hypergraph& h, const Coloring& f, Color palette) {
  CHECK(is_cf_coloring(h, f).ok);
  CHECK(f.is_total());
  CHECK(f.max_color() <= palette);
  for (const auto& e : h.edges()) CHECK(2 * distinct_color_count(e, f) > e.size());
}

}  // namespace

TEST_CASE("palette size") {
  CHECK(lll_palette_size(1, 8) == static_cast<Color>(std::ceil(std::numbers::e * 8)));
  CHECK(lll_palette_size(2, 12.5) == 68);
}

TEST_CASE("preconditions") {
  const Hypergraph one(8, {{0, 1, 2, 3, 4, 5, 6, 7}});
  auto p = make_lll_params(one, 1, 8, 0);
  CHECK(p.gamma == 0);
  CHECK(check_preconditions(one, p).ok);

  const Hypergraph sizes(13, {{0, 1, 2, 3}, {4, 5, 6, 7, 8, 9, 10, 11, 12}});
  const auto rep = check_preconditions(sizes, make_lll_params(sizes, 2, 4, 0));
  CHECK_FALSE(rep.ok);
  REQUIRE(rep.failures.size() == 1);
  CHECK(rep.failures[0].find("edge 1") != std::string::npos);

  // 16 edges of size 16 through a common vertex: Gamma = 15, 2 log2(60) ~ 11.8.
  std::vector<VertexSet> star;
  for (Vertex i = 0; i < 16; ++i) {
    VertexSet e = {0};
    for (Vertex j = 0; j < 15; ++j) e.push_back(1 + i * 15 + j);
    star.push_back(e);
  }
  const Hypergraph crowded(1 + 16 * 15, star);
  CHECK(max_edge_intersections(crowded) == 15);
  CHECK(2 * std::log2(60.0) < 16);
  CHECK(check_preconditions(crowded, make_lll_params(crowded, 1, 16, 0)).ok);

  auto stale = make_lll_params(crowded, 1, 16, 0);
  stale.gamma = 3;
  CHECK_FALSE(check_preconditions(crowded, stale).ok);
  auto small = make_lll_params(crowded, 1, 16, 0);
  small.palette_size = 10;
  CHECK_FALSE(check_preconditions(crowded, small).ok);

  // r below 2 log2(4 Gamma) with Gamma = 15.
  std::vector<VertexSet> tight;
  for (Vertex i = 0; i < 16; ++i) tight.push_back({0, 1 + i});
  const Hypergraph t(17, tight);
  CHECK_FALSE(check_preconditions(t, make_lll_params(t, 1, 2, 0)).ok);
}

TEST_CASE("coloring disjoint and single edges") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto h = disjoint_edges(10, 6);
    const auto p = make_lll_params(h, 1, 6, seed);
    check_strong(h, color_near_uniform(h, p).coloring, p.palette_size);
  }
  const auto single = disjoint_edges(1, 10);
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const auto p = make_lll_params(single, 1, 10, seed);
    const auto res = color_near_uniform(single, p);
    CHECK(res.rounds <= p.max_resample_rounds);
    CHECK(2 * distinct_color_count(single.edge(0), res.coloring) > 10);
  }
}

TEST_CASE("failing preconditions throw") {
  const Hypergraph sizes(13, {{0, 1, 2, 3}, {4, 5, 6, 7, 8, 9, 10, 11, 12}});
  CHECK_THROWS_AS(color_near_uniform(sizes, make_lll_params(sizes, 2, 4, 0)), PreconditionError);
}

TEST_CASE("random near-uniform instances") {
  Rng rng(404);
  for (int t = 0; t < 40; ++t) {
    const std::size_t universe = 200 + rng.below(1801);
    const auto h = random_near_uniform(rng, universe, 50, 16, 2);
    const auto p = make_lll_params(h, 2, 16, static_cast<std::uint64_t>(t));
    REQUIRE(check_preconditions(h, p).ok);
    const auto res = color_near_uniform(h, p);
    CHECK(res.rounds <= 64 * h.num_edges());
    check_strong(h, res.coloring, p.palette_size);
  }
}

TEST_CASE("determinism and round cap") {
  Rng rng(1);
  const auto h = random_near_uniform(rng, 300, 40, 16, 2);
  const auto p = make_lll_params(h, 2, 16, 77);
  CHECK(color_near_uniform(h, p).coloring == color_near_uniform(h, p).coloring);

  // Palette of e*r colors on a tiny edge: force an exhausted cap.
  const Hypergraph pair(2, {{0, 1}});
  auto q = make_lll_params(pair, 1, 2, 0);
  q.palette_size = 6;
  q.max_resample_rounds = 1;
  int exhausted = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    q.seed = seed;
    try {
      const auto res = color_near_uniform(pair, q);
      CHECK(res.rounds <= 1);
    } catch (const RetryExhausted& e) {
      ++exhausted;
      CHECK(e.rounds() == 1);
      CHECK(e.remaining() == std::vector<std::size_t>{0});
    }
  }
  CHECK(exhausted > 0);
}
