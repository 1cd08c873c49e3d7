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

#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "cfcolor/coloring.hpp"
#include "cfcolor/graph.hpp"
#include "cfcolor/hypergraph.hpp"

namespace cfcolor {

// Text formats. Ids are 1-based on disk; lines starting with 'c' are
// comments and blank lines are ignored.
//
//   graph:       p edge <n> <m>   then m lines   e <u> <v>
//   hypergraph:  p hedge <n> <m>  then m lines   h <v1> <v2> ...
//   coloring:    p col <n>        then lines     v <id> <color>   (blank vertices omitted)

/// Throws ParseError with the offending line number.
Graph parse_graph(std::istream& in);
Graph parse_graph(std::string_view text);
/// Canonical form: edges sorted by (u, v) with u < v.
std::string serialize_graph(const Graph& g);

Hypergraph parse_hypergraph(std::istream& in);
Hypergraph parse_hypergraph(std::string_view text);
std::string serialize_hypergraph(const Hypergraph& h);

Coloring parse_coloring(std::istream& in);
Coloring parse_coloring(std::string_view text);
std::string serialize_coloring(const Coloring& f);

}  // namespace cfcolor
