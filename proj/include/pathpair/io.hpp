// Copyright 2026 The pathpair Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PATHPAIR_IO_HPP_
#define PATHPAIR_IO_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "pathpair/blown_cycle.hpp"
#include "pathpair/graph.hpp"
#include "pathpair/pairability.hpp"
#include "pathpair/pairing.hpp"
#include "pathpair/route_plan.hpp"
#include "pathpair/screen.hpp"
#include "pathpair/verifier.hpp"

namespace pathpair::io {

using Json = nlohmann::ordered_json;

/// Raised for malformed input documents.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class GraphFormat { json, dot, edgelist };

GraphFormat parse_format(std::string_view name);
/// Guesses from the extension: .dot/.gv, .txt/.edgelist/.el, otherwise json.
GraphFormat format_for_path(std::string_view path);

/// Blown-cycle parameters carried alongside a graph.
struct BlownCycleTag {
  int m = 0;
  int q = 0;
};

/// {"n": n, "edges": [[u, v], ...]} with u < v, edges sorted.
Json graph_to_json(const Graph& g);
/// Same, plus "blown_cycle": {"m", "q"}.
Json graph_to_json(const BlownCycle& b);
Graph graph_from_json(const Json& j);
std::optional<BlownCycleTag> blown_cycle_tag(const Json& j);

/// `graph G {` with one `v [label="..."];` line per vertex and one `u -- v;`
/// line per edge.
std::string graph_to_dot(const Graph& g);
/// Reads the subset of DOT written by graph_to_dot.
Graph graph_from_dot(std::string_view text);

/// `# n <count>` header, then one `u v` line per edge.
std::string graph_to_edgelist(const Graph& g);
/// Blank lines and `#` comments are skipped; without a header n is one more
/// than the largest id.
Graph graph_from_edgelist(std::string_view text);

std::string write_graph(const Graph& g, GraphFormat format);
Graph read_graph(std::string_view text, GraphFormat format);

/// {"pairs": [[x, y], ...]}
Json pairing_to_json(const Pairing& p);
Pairing pairing_from_json(const Json& j);

/// {"routes": [{"x", "y", "path"}], "edges_used": count}
Json plan_to_json(const RoutePlan& plan);
RoutePlan plan_from_json(const Json& j);

Json report_to_json(const VerificationReport& report);
Json verdict_to_json(const Verdict& v);
Json screen_to_json(const ScreenReport& report);

}  // namespace pathpair::io

#endif  // PATHPAIR_IO_HPP_
