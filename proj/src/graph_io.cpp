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

#include "cfcolor/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <optional>
#include <sstream>
#include <vector>

namespace cfcolor {

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  /// Next non-comment, non-blank line split on whitespace.
  bool next(std::vector<std::string_view>& tokens) {
    while (std::getline(in_, line_)) {
      ++number_;
      tokens.clear();
      std::size_t i = 0;
      while (i < line_.size()) {
        while (i < line_.size() && std::isspace(static_cast<unsigned char>(line_[i]))) ++i;
        const std::size_t start = i;
        while (i < line_.size() && !std::isspace(static_cast<unsigned char>(line_[i]))) ++i;
        if (i > start) tokens.emplace_back(line_.data() + start, i - start);
      }
      if (tokens.empty() || tokens.front() == "c") continue;
      return true;
    }
    return false;
  }

  std::size_t line() const noexcept { return number_; }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(number_, message); }

  std::uint64_t integer(std::string_view token) const {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
      fail("expected a nonnegative integer, got '" + std::string(token) + "'");
    return value;
  }

  /// 1-based id on disk -> 0-based vertex, with range check.
  Vertex vertex(std::string_view token, std::uint64_t n) const {
    const auto id = integer(token);
    if (id < 1 || id > n)
      fail("vertex id " + std::string(token) + " out of range 1.." + std::to_string(n));
    return static_cast<Vertex>(id - 1);
  }

 private:
  std::istream& in_;
  std::string line_;
  std::size_t number_ = 0;
};

std::vector<std::uint64_t> read_header(LineReader& reader, std::string_view kind, std::size_t fields) {
  std::vector<std::string_view> tokens;
  if (!reader.next(tokens)) throw ParseError(reader.line(), "missing 'p " + std::string(kind) + "' header");
  if (tokens.size() != fields + 2 || tokens[0] != "p" || tokens[1] != kind)
    reader.fail("malformed header, expected 'p " + std::string(kind) + "' with " + std::to_string(fields) +
                " count(s)");
  std::vector<std::uint64_t> out;
  for (std::size_t i = 2; i < tokens.size(); ++i) out.push_back(reader.integer(tokens[i]));
  return out;
}

}  // namespace

Graph parse_graph(std::istream& in) {
  LineReader reader(in);
  const auto header = read_header(reader, "edge", 2);
  const std::uint64_t n = header[0];
  const std::uint64_t m = header[1];
  std::vector<Edge> edges;
  std::vector<std::string_view> tokens;
  while (reader.next(tokens)) {
    if (tokens[0] != "e" || tokens.size() != 3) reader.fail("expected 'e <u> <v>'");
    const Vertex u = reader.vertex(tokens[1], n);
    const Vertex v = reader.vertex(tokens[2], n);
    if (u == v) reader.fail("self-loop at vertex " + std::to_string(u + 1));
    if (edges.size() == m) reader.fail("more edge lines than the header's m = " + std::to_string(m));
    edges.emplace_back(u, v);
  }
  if (edges.size() != m)
    throw ParseError(reader.line(), "header declares " + std::to_string(m) + " edges, found " +
                                        std::to_string(edges.size()));
  return Graph(n, edges);
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

Hypergraph parse_hypergraph(std::istream& in) {
  LineReader reader(in);
  const auto header = read_header(reader, "hedge", 2);
  const std::uint64_t n = header[0];
  const std::uint64_t m = header[1];
  std::vector<VertexSet> edges;
  std::vector<std::string_view> tokens;
  while (reader.next(tokens)) {
    if (tokens[0] != "h") reader.fail("expected 'h <v1> <v2> ...'");
    if (tokens.size() < 2) reader.fail("empty hyperedge");
    if (edges.size() == m) reader.fail("more hyperedge lines than the header's m = " + std::to_string(m));
    VertexSet e;
    for (std::size_t i = 1; i < tokens.size(); ++i) e.push_back(reader.vertex(tokens[i], n));
    edges.push_back(std::move(e));
  }
  if (edges.size() != m)
    throw ParseError(reader.line(), "header declares " + std::to_string(m) + " hyperedges, found " +
                                        std::to_string(edges.size()));
  return Hypergraph(n, std::move(edges));
}

Hypergraph parse_hypergraph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_hypergraph(in);
}

std::string serialize_hypergraph(const Hypergraph& h) {
  std::ostringstream out;
  out << "p hedge " << h.universe() << ' ' << h.num_edges() << '\n';
  for (const auto& e : h.edges()) {
    out << 'h';
    for (Vertex v : e) out << ' ' << v + 1;
    out << '\n';
  }
  return out.str();
}

Coloring parse_coloring(std::istream& in) {
  LineReader reader(in);
  const auto header = read_header(reader, "col", 1);
  const std::uint64_t n = header[0];
  Coloring f(n);
  std::vector<std::string_view> tokens;
  while (reader.next(tokens)) {
    if (tokens[0] != "v" || tokens.size() != 3) reader.fail("expected 'v <id> <color>'");
    const Vertex v = reader.vertex(tokens[1], n);
    const auto c = reader.integer(tokens[2]);
    if (c < 1 || c > std::numeric_limits<Color>::max()) reader.fail("colors must be positive integers");
    if (!f.is_blank(v)) reader.fail("vertex " + std::to_string(v + 1) + " colored twice");
    f.set(v, static_cast<Color>(c));
  }
  return f;
}

Coloring parse_coloring(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_coloring(in);
}

std::string serialize_coloring(const Coloring& f) {
  std::ostringstream out;
  out << "p col " << f.size() << '\n';
  for (Vertex v = 0; v < f.size(); ++v)
    if (!f.is_blank(v)) out << "v " << v + 1 << ' ' << f[v] << '\n';
  return out.str();
}

}  // namespace cfcolor
