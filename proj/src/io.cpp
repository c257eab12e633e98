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

#include "pathpair/io.hpp"

#include <algorithm>
#include <charconv>
#include <regex>
#include <sstream>

namespace pathpair::io {
namespace {

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

int parse_int(std::string_view token, std::string_view context) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("expected an integer in " + std::string(context) + ", got '" +
                     std::string(token) + "'");
  }
  return value;
}

template <class F>
auto guarded(std::string_view what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

std::string escape_dot(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

GraphFormat parse_format(std::string_view name) {
  if (name == "json") return GraphFormat::json;
  if (name == "dot") return GraphFormat::dot;
  if (name == "edgelist") return GraphFormat::edgelist;
  throw ParseError("unknown graph format '" + std::string(name) + "'");
}

GraphFormat format_for_path(std::string_view path) {
  if (ends_with(path, ".dot") || ends_with(path, ".gv")) return GraphFormat::dot;
  if (ends_with(path, ".txt") || ends_with(path, ".edgelist") || ends_with(path, ".el")) {
    return GraphFormat::edgelist;
  }
  return GraphFormat::json;
}

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return Json{{"n", g.order()}, {"edges", std::move(edges)}};
}

Json graph_to_json(const BlownCycle& b) {
  Json j = graph_to_json(b.graph());
  j["blown_cycle"] = Json{{"m", b.m()}, {"q", b.q()}};
  return j;
}

Graph graph_from_json(const Json& j) {
  return guarded("graph JSON", [&] {
    int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ParseError("graph JSON: edge must be [u, v]");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph::from_edges(n, edges);
  });
}

std::optional<BlownCycleTag> blown_cycle_tag(const Json& j) {
  if (!j.is_object() || !j.contains("blown_cycle")) return std::nullopt;
  return guarded("blown_cycle annotation", [&] {
    const Json& t = j.at("blown_cycle");
    return std::optional<BlownCycleTag>(BlownCycleTag{t.at("m").get<int>(), t.at("q").get<int>()});
  });
}

std::string graph_to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (VertexId v = 0; v < g.order(); ++v) {
    out << "  " << v << " [label=\"" << escape_dot(g.label(v)) << "\"];\n";
  }
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

Graph graph_from_dot(std::string_view text) {
  static const std::regex header(R"(^\s*(strict\s+)?graph\s*\w*\s*\{\s*$)");
  static const std::regex node(R"re(^\s*(\d+)\s*(\[\s*label\s*=\s*"((?:[^"\\]|\\.)*)"\s*\])?\s*;?\s*$)re");
  static const std::regex edge(R"(^\s*(\d+)\s*--\s*(\d+)\s*;?\s*$)");
  static const std::regex close(R"(^\s*\}\s*$)");

  std::istringstream in{std::string(text)};
  std::string line;
  bool opened = false, closed = false;
  std::vector<std::pair<int, std::string>> nodes;
  std::vector<Edge> edges;
  int n = 0;
  int lineno = 0;
  std::smatch m;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!opened) {
      if (!std::regex_match(line, header)) throw ParseError("DOT: expected 'graph G {' header");
      opened = true;
    } else if (std::regex_match(line, close)) {
      closed = true;
      break;
    } else if (std::regex_match(line, m, edge)) {
      int u = parse_int(m[1].str(), "DOT edge"), v = parse_int(m[2].str(), "DOT edge");
      if (u == v) throw ParseError("DOT: self-loop at vertex " + std::to_string(u));
      edges.emplace_back(u, v);
      n = std::max(n, std::max(u, v) + 1);
    } else if (std::regex_match(line, m, node)) {
      int v = parse_int(m[1].str(), "DOT node");
      std::string label;
      if (m[3].matched) {
        const std::string raw = m[3].str();
        for (std::size_t i = 0; i < raw.size(); ++i) {
          char c = raw[i];
          if (c == '\\' && i + 1 < raw.size()) c = raw[++i];
          label += c;
        }
      } else {
        label = std::to_string(v);
      }
      nodes.emplace_back(v, std::move(label));
      n = std::max(n, v + 1);
    } else {
      throw ParseError("DOT: cannot parse line " + std::to_string(lineno) + ": " + line);
    }
  }
  if (!opened || !closed) throw ParseError("DOT: unterminated graph");
  std::vector<std::string> labels;
  if (!nodes.empty()) {
    labels.resize(n);
    for (int v = 0; v < n; ++v) labels[v] = std::to_string(v);
    for (auto& [v, label] : nodes) labels[v] = std::move(label);
  }
  return guarded("DOT", [&] { return Graph::from_edges(n, edges, std::move(labels)); });
}

std::string graph_to_edgelist(const Graph& g) {
  std::ostringstream out;
  out << "# n " << g.order() << "\n";
  for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
  return out.str();
}

Graph graph_from_edgelist(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<int> declared;
  int n = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a)) continue;
    if (a[0] == '#') {
      std::string key, value;
      std::istringstream comment(line.substr(line.find('#') + 1));
      if (comment >> key >> value && key == "n") declared = parse_int(value, "edge-list header");
      continue;
    }
    if (!(fields >> b) || (fields >> extra)) {
      throw ParseError("edge list: expected 'u v' but got '" + line + "'");
    }
    int u = parse_int(a, "edge list"), v = parse_int(b, "edge list");
    if (u < 0 || v < 0) throw ParseError("edge list: negative vertex id");
    if (u == v) throw ParseError("edge list: self-loop at vertex " + std::to_string(u));
    edges.emplace_back(u, v);
    n = std::max(n, std::max(u, v) + 1);
  }
  if (declared) {
    if (*declared < n) throw ParseError("edge list: vertex id exceeds declared n");
    n = *declared;
  }
  return guarded("edge list", [&] { return Graph::from_edges(n, edges); });
}

std::string write_graph(const Graph& g, GraphFormat format) {
  switch (format) {
    case GraphFormat::json:
      return graph_to_json(g).dump() + "\n";
    case GraphFormat::dot:
      return graph_to_dot(g);
    case GraphFormat::edgelist:
      return graph_to_edgelist(g);
  }
  return {};
}

Graph read_graph(std::string_view text, GraphFormat format) {
  switch (format) {
    case GraphFormat::json:
      return graph_from_json(guarded("graph JSON", [&] { return Json::parse(text); }));
    case GraphFormat::dot:
      return graph_from_dot(text);
    case GraphFormat::edgelist:
      return graph_from_edgelist(text);
  }
  throw ParseError("unknown graph format");
}

Json pairing_to_json(const Pairing& p) {
  Json pairs = Json::array();
  for (const TerminalPair& t : p.pairs()) pairs.push_back({t.x, t.y});
  return Json{{"pairs", std::move(pairs)}};
}

Pairing pairing_from_json(const Json& j) {
  return guarded("pairing JSON", [&] {
    std::vector<TerminalPair> pairs;
    for (const auto& e : j.at("pairs")) {
      if (!e.is_array() || e.size() != 2) throw ParseError("pairing JSON: pair must be [x, y]");
      pairs.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return Pairing(std::move(pairs));
  });
}

Json plan_to_json(const RoutePlan& plan) {
  Json routes = Json::array();
  for (const Route& r : plan.routes) {
    routes.push_back(Json{{"x", r.x}, {"y", r.y}, {"path", r.path}});
  }
  return Json{{"routes", std::move(routes)}, {"edges_used", plan.edges_used()}};
}

RoutePlan plan_from_json(const Json& j) {
  return guarded("route plan JSON", [&] {
    std::vector<Route> routes;
    for (const auto& r : j.at("routes")) {
      routes.push_back(
          {r.at("x").get<int>(), r.at("y").get<int>(), r.at("path").get<std::vector<int>>()});
    }
    return RoutePlan::from_routes(std::move(routes));
  });
}

Json report_to_json(const VerificationReport& report) {
  Json violations = Json::array();
  for (const Violation& v : report.violations) {
    Json entry{{"kind", violation_name(v.kind)}, {"pairs", v.pairs}};
    entry["edge"] = v.edge ? Json{v.edge->u, v.edge->v} : Json(nullptr);
    entry["vertex"] = v.vertex ? Json(*v.vertex) : Json(nullptr);
    violations.push_back(std::move(entry));
  }
  Json warnings = Json::array();
  for (const RepeatWarning& w : report.warnings) {
    warnings.push_back(Json{{"kind", "vertex-repeated"}, {"pair", w.pair}, {"vertex", w.vertex}});
  }
  return Json{{"ok", report.ok}, {"violations", std::move(violations)},
              {"warnings", std::move(warnings)}};
}

Json verdict_to_json(const Verdict& v) {
  return Json{{"status", status_name(v.status)},
              {"witness", v.witness ? pairing_to_json(*v.witness) : Json(nullptr)},
              {"stats", Json{{"pairings_examined", v.pairings_examined},
                             {"nodes_expanded", v.nodes_expanded}}}};
}

Json screen_to_json(const ScreenReport& report) {
  Json roots = Json::array();
  for (const RootFindings& f : report.roots) {
    Json layer_pair = Json::array();
    for (const auto& v : f.layer_pair) {
      layer_pair.push_back(Json{{"k", v.k}, {"layer_sum", v.layer_sum}, {"prefix", v.prefix}});
    }
    Json layer_cut = Json::array();
    for (const auto& v : f.layer_cut) {
      layer_cut.push_back(Json{{"t", v.t}, {"cut", v.cut}, {"required", v.required}});
    }
    roots.push_back(Json{{"root", f.profile.root},
                         {"layer_sizes", f.profile.sizes},
                         {"layer_pair_violations", std::move(layer_pair)},
                         {"layer_cut_violations", std::move(layer_cut)}});
  }
  Json diameter_violation = nullptr;
  if (report.diameter_violation) {
    diameter_violation = Json{{"diameter", report.diameter_violation->diameter},
                              {"bound", report.diameter_violation->bound}};
  }
  return Json{
      {"n", report.order},
      {"diameter", report.diameter},
      {"diameter_bound", report.diameter_bound},
      {"verdict", report.verdict == ScreenVerdict::not_path_pairable ? "not-path-pairable"
                                                                      : "cannot-rule-out"},
      {"reason", report.reason},
      {"diameter_violation", std::move(diameter_violation)},
      {"roots", std::move(roots)},
  };
}

}  // namespace pathpair::io
