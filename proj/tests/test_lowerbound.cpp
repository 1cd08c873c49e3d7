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

#include "cfcolor/generators.hpp"
#include "cfcolor/lowerbound.hpp"
#include "cfcolor/oracle.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cfcolor;

namespace {

LayerMeta uniform_meta(std::size_t n, double w) {
  LayerMeta m;
  m.n = n;
  m.layers = 1;
  m.layer.assign(n, 1);
  m.weight.assign(n, w);
  m.layer_sizes = {n};
  return m;
}

VertexSet definitional_unique(const Graph& g, const VertexSet& s) {
  VertexSet out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (std::find(s.begin(), s.end(), v) != s.end()) continue;
    std::size_t hits = 0;
    for (Vertex u : s) hits += g.adjacent(u, v);
    if (hits == 1) out.push_back(v);
  }
  return out;
}

}  // namespace

TEST_CASE("layer metadata") {
  const auto m = layered_meta(20, 0.002);
  CHECK(m.layers == 2);
  CHECK(m.layer_sizes == std::vector<std::size_t>{10, 10});
  CHECK(m.eps0 == doctest::Approx(0.002 / 3));
  // edge probability across layers 1 and 2
  CHECK(m.weight[0] * m.weight[19] == doctest::Approx(std::pow(1 - m.eps0, 3)));

  const auto r = layered_meta(23, 0.002);
  CHECK(r.layer_sizes == std::vector<std::size_t>{7, 7, 9});
  CHECK(layered_meta(5, 0.001).layers == 1);

  for (std::size_t i = 1; i < m.n; ++i) CHECK(m.weight[i] <= m.weight[i - 1]);
  for (double w : m.weight) CHECK((w > 0 && w < 1));

  CHECK_THROWS_AS(layered_meta(2, 0.001), ParameterError);
  CHECK_THROWS_AS(layered_meta(10, 0.003), ParameterError);
  CHECK_THROWS_AS(layered_meta(10, 0.0), ParameterError);

  const auto big = layered_meta(5000, 0.002);
  CHECK(big.r_colors == static_cast<std::size_t>(std::floor(std::pow(big.eps0, 3) * std::pow(std::log(5000.0), 2))));
}

TEST_CASE("layered generation") {
  const auto [a, meta] = generate_layered({60, 0.002, 4});
  const auto [b, meta2] = generate_layered({60, 0.002, 4});
  CHECK(a == b);
  CHECK(meta.weight == meta2.weight);

  const auto [g, m] = generate_layered({100, 3e-9, 1});
  const double fraction = static_cast<double>(g.num_edges()) / (100.0 * 99 / 2);
  CHECK(fraction >= 0.999);
}

TEST_CASE("set weight") {
  const auto m = uniform_meta(4, 0.999);
  CHECK(set_weight(m, {}) == 0.0);
  CHECK(set_weight(m, {0, 1}) == doctest::Approx(1.998));

  const auto meta = layered_meta(500, 0.002);
  VertexSet all(500);
  for (Vertex v = 0; v < 500; ++v) all[v] = v;
  double by_layer = 0;
  for (std::size_t i = 1; i <= meta.layers; ++i)
    by_layer += static_cast<double>(meta.layer_sizes[i - 1]) * std::pow(1 - meta.eps0, static_cast<double>(i));
  CHECK(set_weight(meta, all) == doctest::Approx(by_layer));
}

TEST_CASE("unique neighbor set") {
  CHECK(unique_neighbor_set(star_graph(3), {0}) == VertexSet{1, 2, 3});
  CHECK(unique_neighbor_set(complete_graph(4), {0, 1}).empty());
  CHECK(unique_neighbor_set(path_graph(4), {1}) == VertexSet{0, 2});

  Rng rng(8);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = gnp_graph(20, 0.25, seed);
    VertexSet s;
    for (Vertex v = 0; v < 20; ++v)
      if (rng.bernoulli(0.3)) s.push_back(v);
    CHECK(unique_neighbor_set(g, s) == definitional_unique(g, s));
  }
}

TEST_CASE("heavy and light sets") {
  const auto meta = layered_meta(50, 0.002);
  CHECK(classify_set(meta, {}) == SetClass::light);
  VertexSet all(50);
  for (Vertex v = 0; v < 50; ++v) all[v] = v;
  CHECK(classify_set(meta, all) == SetClass::heavy);

  const auto half = uniform_meta(16, 0.5);
  CHECK(classify_set(half, {0, 1, 2, 3, 4, 5, 6, 7}) == SetClass::light);  // weight exactly 4
  CHECK(classify_set(half, {0, 1, 2, 3, 4, 5, 6, 7, 8}) == SetClass::heavy);
}

TEST_CASE("expected degrees") {
  const auto small = layered_meta(6, 0.002);
  const auto mu = expected_degrees(small);
  for (double x : mu) CHECK(x == doctest::Approx(mu[0]));
  CHECK(mu[0] == doctest::Approx(5 * std::pow(1 - small.eps0, 2)));

  const auto m = layered_meta(20, 0.002);
  const auto mu20 = expected_degrees(m);
  const double w1 = 1 - m.eps0, w2 = w1 * w1;
  CHECK(mu20[0] == doctest::Approx(9 * w1 * w1 + 10 * w1 * w2));
  CHECK(mu20[19] == doctest::Approx(10 * w2 * w1 + 9 * w2 * w2));
}

TEST_CASE("degree report") {
  const auto [g, meta] = generate_layered({7, 0.002, 3});
  const auto rep = degree_report(g, meta, 0.5);
  REQUIRE(rep.layers.size() == 1);
  CHECK(rep.layers[0].size == 7);
  CHECK(rep.max_degree == g.max_degree());
  CHECK(rep.min_degree == g.min_degree());
  CHECK(rep.ratio == doctest::Approx(double(g.min_degree()) / std::pow(double(g.max_degree()), 1 - 0.002)));
  CHECK_THROWS_AS(degree_report(g, meta, 1.0), ParameterError);

  const auto [big, bmeta] = generate_layered({4096, 0.002, 5});
  const auto brep = degree_report(big, bmeta, 0.25);
  CHECK(brep.flagged.empty());
  CHECK(brep.layers.size() == 8);
  CHECK(brep.max_degree == big.max_degree());
  CHECK(big.degree(brep.max_degree_vertex) == brep.max_degree);
  CHECK(big.degree(brep.min_degree_vertex) == brep.min_degree);
  CHECK(brep.max_degree_layer == 1);
  CHECK(brep.min_degree_layer == 8);
}

TEST_CASE("take care checks") {
  const Graph g = cycle_graph(5);
  Coloring distinct(std::vector<Color>{1, 2, 3, 4, 5});
  CHECK(not_taken_care_of(g, distinct).empty());
  CHECK(takecare_probe(complete_graph(3), 1, 10, 0).min_uncovered == 3);
  CHECK(not_taken_care_of(complete_graph(3), Coloring(3, 1)).size() == 3);

  // every closed neighborhood seen by the probe matches verify
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph h = gnp_graph(10, 0.3, seed);
    Rng rng(seed);
    Coloring f(10);
    for (Vertex v = 0; v < 10; ++v) f.set(v, static_cast<Color>(1 + rng.below(3)));
    CHECK(not_taken_care_of(h, f) == verify(h, f, NeighborhoodMode::closed).violating);
  }
}

TEST_CASE("take care sweep on a small layered graph") {
  const auto [g, meta] = generate_layered({12, 0.002, 9});
  CHECK(g.num_edges() == 66);  // the complete graph at this seed
  const std::size_t regression[] = {12, 0, 0, 0};
  std::size_t previous = g.num_vertices() + 1;
  for (std::size_t r = 1; r <= 4; ++r) {
    const auto rep = takecare_probe(g, r, 500, 9);
    CHECK(rep.min_uncovered == regression[r - 1]);
    CHECK(rep.min_uncovered <= previous);
    previous = rep.min_uncovered;
    REQUIRE(rep.chi_cn);
    CHECK(*rep.chi_cn == chi_cn_exact(g));
    if (r >= *rep.chi_cn) CHECK(rep.min_uncovered == 0);
  }
  CHECK(chi_cn_exact(g) == 2);
}

TEST_CASE("model formulas") {
  const auto m = uniform_meta(3, 0.5);
  CHECK(take_care_probability(m, 0, {1}) == doctest::Approx(0.25));
  CHECK(take_care_probability(m, 0, {1, 2}) == doctest::Approx(2 * 0.25 * 0.75));
  CHECK(take_care_probability(m, 0, {}) == 0.0);
  CHECK(f_eps0(0.001) == doctest::Approx(std::exp(0.001) * std::log(1 / (1 - std::exp(-0.001)))));
}

TEST_CASE("finite bounds on sampled sets") {
  for (std::size_t n : {64u, 500u, 2000u}) {
    const auto [g, meta] = generate_layered({n, 0.002, n});
    const auto d = set_diagnostics(g, meta, 50, 1);
    CHECK(d.min_weight > d.weight_floor);
    for (double w : meta.weight) CHECK(w >= std::pow(1 - meta.eps0, std::log(double(n))));
    CHECK(d.light_checked > 0);
    CHECK(d.light_size_violations == 0);
    CHECK(d.heavy_samples > 0);
    CHECK(d.independence_number.has_value() == (n <= 60));
  }
  const auto [g, meta] = generate_layered({40, 0.002, 2});
  const auto d = set_diagnostics(g, meta, 10, 1);
  REQUIRE(d.independence_number);
  CHECK(*d.independence_number == independence_number(g));
  const auto j = to_json(d);
  CHECK(j.contains("light_union"));
}
