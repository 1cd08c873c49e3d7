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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "cfcolor/clawfree_cfcn.hpp"
#include "cfcolor/clawfree_cfon.hpp"
#include "cfcolor/generators.hpp"
#include "cfcolor/graph_io.hpp"
#include "cfcolor/hypergraph.hpp"
#include "cfcolor/lowerbound.hpp"
#include "cfcolor/mindeg.hpp"
#include "cfcolor/oracle.hpp"
#include "json.hpp"

namespace {

using namespace cfcolor;
using nlohmann::json;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

class IoError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << text;
}

json one_based(const std::vector<Vertex>& vs) {
  json out = json::array();
  for (Vertex v : vs) out.push_back(v + 1);
  return out;
}

NeighborhoodMode parse_mode(const std::string& s) {
  return s == "closed" ? NeighborhoodMode::closed : NeighborhoodMode::open;
}

// ---- gen ----

struct GenArgs {
  std::string family = "gnp";
  std::size_t n = 10;
  double p = 0.3;
  double radius = 0.3;
  std::uint64_t seed = 0;
  std::string base = "gnp";
  bool drop_isolated = false;
  std::string output;
};

GraphFamily family_of(const std::string& name, std::size_t n, double p, double radius, std::uint64_t seed,
                      const std::string& base) {
  GraphFamily f;
  f.tag = parse_family(name);
  f.n = n;
  f.p = p;
  f.radius = radius;
  f.seed = seed;
  if (f.tag == FamilyTag::line_graph_of) {
    auto b = family_of(base, n, p, radius, seed, "gnp");
    if (b.tag == FamilyTag::line_graph_of) throw ParameterError("base", "cannot be line-graph");
    f.base = std::make_shared<const GraphFamily>(b);
  }
  return f;
}

int run_gen(const GenArgs& a) {
  Graph g = generate(family_of(a.family, a.n, a.p, a.radius, a.seed, a.base));
  if (a.drop_isolated) g = without_isolated_vertices(g);
  write_output(a.output, serialize_graph(g));
  return 0;
}

// ---- color ----

struct ColorArgs {
  std::string graph;
  std::string algo = "cfon-clawfree";
  std::uint64_t seed = 0;
  std::optional<std::size_t> k;
  std::optional<double> c;
  double eps = 0.0;
  bool no_repair = false;
  bool allow_low_degree = false;
  std::string output;
  std::string cert;
};

Coloring exact_coloring(const Graph& g, NeighborhoodMode mode) {
  if (g.num_vertices() == 0) return Coloring(0);
  for (Color k = 1;; ++k)
    if (auto f = find_neighborhood_coloring(g, mode, k)) return std::move(*f);
}

int run_color(const ColorArgs& a) {
  const Graph g = parse_graph(read_file(a.graph));
  Coloring f;
  json cert = {{"schema", 1}, {"algo", a.algo}, {"seed", a.seed}, {"n", g.num_vertices()}};

  if (a.algo == "cfon-clawfree") {
    CfonOptions opt;
    opt.k = a.k;
    opt.seed = a.seed;
    opt.fallback = !a.no_repair;
    auto res = color_clawfree_cfon(g, opt);
    f = std::move(res.coloring);
    cert["certificate"] = to_json(res.certificate);
  } else if (a.algo == "cfcn-clawfree") {
    auto p = make_cfcn_params(g, a.seed);
    if (a.k) p.k = *a.k;
    if (a.c) p.c = *a.c;
    auto res = color_clawfree_cfcn(g, p);
    f = std::move(res.coloring);
    cert["k"] = p.k;
    cert["rounds"] = res.rounds;
    cert["leftover_vertices"] = res.leftover_vertices;
    cert["color_bound"] = res.color_bound;
    cert["warnings"] = res.warnings;
  } else if (a.algo == "mindeg") {
    const auto policy = a.allow_low_degree ? DegreePolicy::report : DegreePolicy::enforce;
    const auto p = make_mindeg_params(g, a.c.value_or(1.0), a.eps, a.seed, policy);
    auto res = color_mindeg_cfon(g, p);
    f = std::move(res.coloring);
    cert["c"] = p.c;
    cert["eps"] = p.eps;
    cert["sample_prob"] = p.sample_prob;
    cert["window"] = {p.window_lo, p.window_hi};
    cert["A_size"] = res.sample.A.size();
    cert["fallback"] = res.fallback;
    cert["lll_rounds"] = res.lll_rounds;
    cert["color_bound"] = res.color_bound;
    cert["low_degree_vertices"] = one_based(res.sample.low_degree);
  } else if (a.algo == "exact-on") {
    f = exact_coloring(g, NeighborhoodMode::open);
  } else if (a.algo == "exact-cn") {
    f = exact_coloring(g, NeighborhoodMode::closed);
  }
  cert["colors"] = f.num_colors();

  write_output(a.output, serialize_coloring(f));
  const std::string cert_text = cert.dump() + "\n";
  if (!a.cert.empty())
    write_output(a.cert, cert_text);
  else if (!a.output.empty() && a.output != "-")
    std::cout << cert_text;
  return 0;
}

// ---- verify / chi ----

int run_verify(const std::string& graph, const std::string& coloring, const std::string& mode) {
  const Graph g = parse_graph(read_file(graph));
  const Coloring f = parse_coloring(read_file(coloring));
  const auto rep = verify(g, f, parse_mode(mode));
  std::cout << json{{"schema", 1}, {"mode", mode}, {"ok", rep.ok}, {"violating", one_based(rep.violating)}}.dump()
            << "\n";
  return rep.ok ? 0 : kExitFailure;
}

int run_chi(const std::string& file, const std::string& which) {
  const std::string text = read_file(file);
  std::size_t value = 0;
  if (which == "cf")
    value = chi_cf_exact(parse_hypergraph(text));
  else if (which == "on")
    value = chi_on_exact(parse_graph(text));
  else
    value = chi_cn_exact(parse_graph(text));
  std::cout << value << "\n";
  return 0;
}

// ---- lab ----

struct LabArgs {
  std::size_t n = 64;
  double eps = 0.002;
  std::uint64_t seed = 0;
  double alpha = 0.25;
  std::vector<std::size_t> r = {1, 2, 3, 4};
  std::size_t trials = 100;
  std::size_t samples = 20;
};

int run_lab(const LabArgs& a) {
  const auto [g, meta] = generate_layered({a.n, a.eps, a.seed});
  json row = {{"schema", 1}, {"n", a.n}, {"eps", a.eps}, {"seed", a.seed}};
  row["meta"] = to_json(meta);
  row["edges"] = g.num_edges();
  row["degrees"] = to_json(degree_report(g, meta, a.alpha));
  json probes = json::array();
  for (std::size_t i = 0; i < a.r.size(); ++i)
    probes.push_back(to_json(takecare_probe(g, a.r[i], a.trials, derive_seed(a.seed, 100 + i))));
  row["probes"] = probes;
  row["diagnostics"] = to_json(set_diagnostics(g, meta, a.samples, derive_seed(a.seed, 200)));
  std::cout << row.dump() << "\n";
  return 0;
}

// ---- sweep ----

struct SweepArgs {
  std::vector<std::string> families = {"gnp"};
  std::vector<std::string> algos = {"cfon-clawfree"};
  std::size_t n_min = 6;
  std::size_t n_max = 10;
  std::size_t n_step = 2;
  std::uint64_t seed_start = 0;
  std::size_t seeds = 3;
  double p = 0.3;
  double radius = 0.3;
  std::string base = "gnp";
};

struct SweepRow {
  std::string family;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string algo;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t max_degree = 0;
  std::string status;
  std::size_t colors = 0;
  std::string bound;
  bool ok = false;
  std::size_t extra = 0;  // repairs / rounds / fallback
};

SweepRow sweep_cell(const SweepArgs& a, const std::string& family, std::size_t n, std::uint64_t seed,
                    const std::string& algo) {
  SweepRow row;
  row.family = family;
  row.n = n;
  row.seed = seed;
  row.algo = algo;
  const Graph g = without_isolated_vertices(generate(family_of(family, n, a.p, a.radius, seed, a.base)));
  row.vertices = g.num_vertices();
  row.edges = g.num_edges();
  row.max_degree = g.max_degree();
  try {
    Coloring f;
    NeighborhoodMode mode = NeighborhoodMode::open;
    if (algo == "cfon-clawfree") {
      auto res = color_clawfree_cfon(g, {std::nullopt, seed, true});
      f = std::move(res.coloring);
      std::ostringstream b;
      b << res.certificate.budget;
      row.bound = b.str();
      row.extra = res.certificate.repairs.size();
    } else if (algo == "cfcn-clawfree") {
      auto res = color_clawfree_cfcn(g, make_cfcn_params(g, seed));
      f = std::move(res.coloring);
      mode = NeighborhoodMode::closed;
      row.bound = std::to_string(res.color_bound);
      row.extra = res.rounds;
    } else if (algo == "mindeg") {
      auto res = color_mindeg_cfon(g, make_mindeg_params(g, 1.0, 0.0, seed, DegreePolicy::report));
      f = std::move(res.coloring);
      row.bound = std::to_string(res.color_bound);
      row.extra = res.fallback ? 1 : 0;
    } else if (algo == "exact-on") {
      f = exact_coloring(g, NeighborhoodMode::open);
    } else {
      f = exact_coloring(g, NeighborhoodMode::closed);
      mode = NeighborhoodMode::closed;
    }
    row.colors = f.num_colors();
    row.ok = verify(g, f, mode).ok;
    row.status = "done";
  } catch (const Error& e) {
    row.status = "error";
  }
  return row;
}

int run_sweep(const SweepArgs& a) {
  if (a.n_step == 0) throw ParameterError("n-step", "must be positive");
  if (a.n_min > a.n_max) throw ParameterError("n-min", "exceeds n-max");
  std::vector<SweepRow> rows;
  for (const auto& family : a.families)
    for (std::size_t n = a.n_min; n <= a.n_max; n += a.n_step)
      for (std::uint64_t s = a.seed_start; s < a.seed_start + a.seeds; ++s)
        for (const auto& algo : a.algos) rows.push_back(sweep_cell(a, family, n, s, algo));
  std::sort(rows.begin(), rows.end(), [](const SweepRow& x, const SweepRow& y) {
    return std::tie(x.family, x.n, x.seed, x.algo) < std::tie(y.family, y.n, y.seed, y.algo);
  });
  std::cout << "family,n,seed,algo,vertices,edges,max_degree,status,colors,bound,ok,extra\n";
  for (const auto& r : rows)
    std::cout << r.family << ',' << r.n << ',' << r.seed << ',' << r.algo << ',' << r.vertices << ',' << r.edges
              << ',' << r.max_degree << ',' << r.status << ',' << r.colors << ',' << r.bound << ','
              << (r.ok ? 1 : 0) << ',' << r.extra << '\n';
  return 0;
}

void print_error(const std::string& kind, const std::string& message, json extra = json::object()) {
  json err = {{"kind", kind}, {"message", message}};
  for (auto& [key, value] : extra.items()) err[key] = value;
  std::cerr << json{{"schema", 1}, {"error", err}}.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conflict-free coloring of graphs and hypergraphs"};
  app.require_subcommand(1);

  const std::vector<std::string> families = {"complete", "star",       "path", "cycle", "subdivided-complete",
                                             "line-graph", "gnp", "geometric"};
  const std::vector<std::string> algos = {"cfon-clawfree", "cfcn-clawfree", "mindeg", "exact-on", "exact-cn"};

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph file");
  gen_cmd->add_option("--family", gen.family)->check(CLI::IsMember(families))->capture_default_str();
  gen_cmd->add_option("--n", gen.n, "Vertex count (base graph order for line-graph)")->capture_default_str();
  gen_cmd->add_option("--p", gen.p, "Edge probability for gnp")->capture_default_str();
  gen_cmd->add_option("--radius", gen.radius, "Connection radius for geometric")->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed)->capture_default_str();
  gen_cmd->add_option("--base", gen.base, "Base family for line-graph")
      ->check(CLI::IsMember(families))
      ->capture_default_str();
  gen_cmd->add_flag("--drop-isolated", gen.drop_isolated, "Remove isolated vertices");
  gen_cmd->add_option("-o,--output", gen.output, "Output file (default stdout)");

  ColorArgs color;
  auto* color_cmd = app.add_subcommand("color", "Color a graph");
  color_cmd->add_option("graph", color.graph)->required();
  color_cmd->add_option("--algo", color.algo)->check(CLI::IsMember(algos))->capture_default_str();
  color_cmd->add_option("--seed", color.seed)->capture_default_str();
  color_cmd->add_option("--k", color.k, "Claw bound k (default claw number + 1)");
  color_cmd->add_option("--c", color.c, "Constant c (mindeg default 1, cfcn default 0.02)");
  color_cmd->add_option("--eps", color.eps, "Exponent eps for mindeg")->capture_default_str();
  color_cmd->add_flag("--no-repair", color.no_repair, "Fail instead of repairing cfon-clawfree output");
  color_cmd->add_flag("--allow-low-degree", color.allow_low_degree,
                      "Report instead of rejecting vertices below the mindeg degree requirement");
  color_cmd->add_option("-o,--output", color.output, "Coloring file (default stdout)");
  color_cmd->add_option("--cert", color.cert, "Certificate JSON file (default stdout when -o is given)");

  std::string verify_graph, verify_coloring, verify_mode = "open";
  auto* verify_cmd = app.add_subcommand("verify", "Check a coloring; exit 0 iff valid");
  verify_cmd->add_option("graph", verify_graph)->required();
  verify_cmd->add_option("coloring", verify_coloring)->required();
  verify_cmd->add_option("--mode", verify_mode)->check(CLI::IsMember({"open", "closed"}))->capture_default_str();

  std::string chi_file, chi_which = "on";
  auto* chi_cmd = app.add_subcommand("chi", "Exact chromatic number");
  chi_cmd->add_option("file", chi_file, "Graph file, or hypergraph file for --which cf")->required();
  chi_cmd->add_option("--which", chi_which)->check(CLI::IsMember({"on", "cn", "cf"}))->capture_default_str();

  LabArgs lab;
  auto* lab_cmd = app.add_subcommand("lab", "Layered random graph reports");
  lab_cmd->add_option("--n", lab.n)->capture_default_str();
  lab_cmd->add_option("--eps", lab.eps)->capture_default_str();
  lab_cmd->add_option("--seed", lab.seed)->capture_default_str();
  lab_cmd->add_option("--alpha", lab.alpha)->capture_default_str();
  lab_cmd->add_option("--r", lab.r, "Palette sizes to probe")->delimiter(',')->capture_default_str();
  lab_cmd->add_option("--trials", lab.trials)->capture_default_str();
  lab_cmd->add_option("--samples", lab.samples, "Random sets per diagnostic")->capture_default_str();

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "CSV over families, sizes, seeds and algorithms");
  sweep_cmd->add_option("--families", sweep.families)
      ->delimiter(',')
      ->check(CLI::IsMember(families))
      ->capture_default_str();
  sweep_cmd->add_option("--algos", sweep.algos)->delimiter(',')->check(CLI::IsMember(algos))->capture_default_str();
  sweep_cmd->add_option("--n-min", sweep.n_min)->capture_default_str();
  sweep_cmd->add_option("--n-max", sweep.n_max)->capture_default_str();
  sweep_cmd->add_option("--n-step", sweep.n_step)->capture_default_str();
  sweep_cmd->add_option("--seed", sweep.seed_start, "First seed")->capture_default_str();
  sweep_cmd->add_option("--seeds", sweep.seeds, "Number of seeds")->capture_default_str();
  sweep_cmd->add_option("--p", sweep.p)->capture_default_str();
  sweep_cmd->add_option("--radius", sweep.radius)->capture_default_str();
  sweep_cmd->add_option("--base", sweep.base)->check(CLI::IsMember(families))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*color_cmd) return run_color(color);
    if (*verify_cmd) return run_verify(verify_graph, verify_coloring, verify_mode);
    if (*chi_cmd) return run_chi(chi_file, chi_which);
    if (*lab_cmd) return run_lab(lab);
    if (*sweep_cmd) return run_sweep(sweep);
  } catch (const ParameterError& e) {
    print_error("parameter", e.what(), {{"field", e.field()}});
    return kExitUsage;
  } catch (const ParseError& e) {
    print_error("parse", e.what(), {{"line", e.line()}});
    return kExitFailure;
  } catch (const PreconditionError& e) {
    json extra = json::object();
    if (e.vertex()) extra["vertex"] = *e.vertex() + 1;
    print_error("precondition", e.what(), extra);
    return kExitFailure;
  } catch (const RetryExhausted& e) {
    print_error("retry-exhausted", e.what(), {{"rounds", e.rounds()}});
    return kExitFailure;
  } catch (const UnsatisfiedVertices& e) {
    print_error("unsatisfied", e.what(), {{"vertices", one_based(e.vertices())}});
    return kExitFailure;
  } catch (const IoError& e) {
    print_error("io", e.what());
    return kExitFailure;
  } catch (const std::exception& e) {
    print_error("internal", e.what());
    return kExitFailure;
  }
  return kExitUsage;
}
