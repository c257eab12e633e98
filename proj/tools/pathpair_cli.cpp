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

// pathpair: build the blown-cycle family, route pairings through it, verify
// plans, and decide or screen path-pairability.
//
// Exit status: 0 success / pass, 1 verified negative, 2 usage or parse
// error, 3 inconclusive (search budget exhausted).

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "pathpair/blown_cycle.hpp"
#include "pathpair/generators.hpp"
#include "pathpair/io.hpp"
#include "pathpair/metrics.hpp"
#include "pathpair/pairability.hpp"
#include "pathpair/router.hpp"
#include "pathpair/screen.hpp"
#include "pathpair/verifier.hpp"

namespace {

using pathpair::io::Json;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

struct GraphSource {
  std::string family;
  std::string graph_path;
  std::string input_format;
  int m = 0;
  int n = 0;
  int a = 0;
  int b = 0;
  int c = 0;
  int dim = 0;
};

void add_source_options(CLI::App* cmd, GraphSource& src) {
  cmd->add_option("--family", src.family,
                  "cycle|path|complete|complete-bipartite|hypercube|petersen|grid2|grid3|"
                  "blown-cycle");
  cmd->add_option("--graph", src.graph_path, "graph file ('-' for stdin)");
  cmd->add_option("--input-format", src.input_format, "json|dot|edgelist (default: by extension)");
  cmd->add_option("--m", src.m, "blown cycle: half cycle length");
  cmd->add_option("--n", src.n, "cycle/path/complete: vertex count");
  cmd->add_option("--a", src.a, "first part or side length");
  cmd->add_option("--b", src.b, "second part or side length");
  cmd->add_option("--c", src.c, "third side length (grid3)");
  cmd->add_option("--dim", src.dim, "hypercube dimension");
}

std::string read_text(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw pathpair::io::ParseError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Json read_json(const std::string& path) {
  try {
    return Json::parse(read_text(path));
  } catch (const Json::exception& e) {
    throw pathpair::io::ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw pathpair::io::ParseError("cannot write '" + path + "'");
  out << text;
}

pathpair::FamilySpec family_spec(const GraphSource& src) {
  using pathpair::Family;
  pathpair::FamilySpec spec;
  spec.family = pathpair::parse_family(src.family);
  switch (spec.family) {
    case Family::cycle:
    case Family::path:
    case Family::complete:
      spec.params = {src.n};
      break;
    case Family::complete_bipartite:
    case Family::grid2:
      spec.params = {src.a, src.b};
      break;
    case Family::grid3:
      spec.params = {src.a, src.b, src.c};
      break;
    case Family::hypercube:
      spec.params = {src.dim};
      break;
    case Family::petersen:
      break;
  }
  return spec;
}

pathpair::BlownCycle blown_cycle_checked(int m, std::optional<int> q = std::nullopt) {
  pathpair::BlownCycle b = pathpair::BlownCycle::build(m);
  if (q && *q != b.q()) {
    throw pathpair::io::ParseError("blown_cycle annotation q = " + std::to_string(*q) +
                                   " does not match 4m+3 = " + std::to_string(b.q()));
  }
  return b;
}

struct LoadedGraph {
  pathpair::Graph graph;
  std::optional<pathpair::BlownCycle> blown;
};

LoadedGraph load_graph(const GraphSource& src) {
  if (!src.graph_path.empty() && !src.family.empty()) {
    throw pathpair::io::ParseError("give either --graph or --family, not both");
  }
  if (!src.graph_path.empty()) {
    auto format = src.input_format.empty() ? pathpair::io::format_for_path(src.graph_path)
                                           : pathpair::io::parse_format(src.input_format);
    std::string text = read_text(src.graph_path);
    if (format == pathpair::io::GraphFormat::json) {
      Json j;
      try {
        j = Json::parse(text);
      } catch (const Json::exception& e) {
        throw pathpair::io::ParseError(std::string("graph JSON: ") + e.what());
      }
      LoadedGraph loaded{pathpair::io::graph_from_json(j), std::nullopt};
      if (auto tag = pathpair::io::blown_cycle_tag(j)) {
        loaded.blown = blown_cycle_checked(tag->m, tag->q);
        if (!(loaded.blown->graph() == loaded.graph)) {
          throw pathpair::io::ParseError("graph does not match its blown_cycle annotation");
        }
      }
      return loaded;
    }
    return {pathpair::io::read_graph(text, format), std::nullopt};
  }
  if (src.family == "blown-cycle") {
    auto b = blown_cycle_checked(src.m);
    return {b.graph(), b};
  }
  if (!src.family.empty()) return {pathpair::generate(family_spec(src)), std::nullopt};
  if (src.m > 0) {
    auto b = blown_cycle_checked(src.m);
    return {b.graph(), b};
  }
  throw pathpair::io::ParseError("no graph given (use --family, --graph or --m)");
}

int cmd_generate(const GraphSource& src, const std::string& format, const std::string& output) {
  if (src.family.empty()) throw pathpair::io::ParseError("generate needs --family");
  LoadedGraph loaded = load_graph(src);
  auto fmt = pathpair::io::parse_format(format);
  if (fmt == pathpair::io::GraphFormat::json && loaded.blown) {
    write_text(output, pathpair::io::graph_to_json(*loaded.blown).dump() + "\n");
  } else {
    write_text(output, pathpair::io::write_graph(loaded.graph, fmt));
  }
  return kExitOk;
}

int cmd_route(const GraphSource& src, const std::string& pairing_path,
              std::optional<std::uint64_t> seed, const std::string& output) {
  LoadedGraph loaded = load_graph(src);
  if (!loaded.blown) {
    throw pathpair::io::ParseError("route works on blown cycles only (use --m or an annotated graph)");
  }
  const pathpair::BlownCycle& b = *loaded.blown;
  if (pairing_path.empty() == !seed.has_value()) {
    throw pathpair::io::ParseError("give exactly one of --pairing and --random");
  }
  pathpair::Pairing pairing = seed ? pathpair::random_perfect_pairing(b.order(), *seed)
                                   : pathpair::io::pairing_from_json(read_json(pairing_path));
  pathpair::RoutePlan plan = pathpair::route(b, pairing);

  Json out{{"blown_cycle", Json{{"m", b.m()}, {"q", b.q()}}},
           {"seed", seed ? Json(*seed) : Json(nullptr)}};
  out["pairs"] = pathpair::io::pairing_to_json(pairing)["pairs"];
  Json plan_json = pathpair::io::plan_to_json(plan);
  out["routes"] = std::move(plan_json["routes"]);
  out["edges_used"] = plan_json["edges_used"];
  write_text(output, out.dump() + "\n");

  // The blown cycle is vertex-transitive, so one eccentricity is the diameter.
  std::cerr << "n " << b.order() << "\n"
            << "diameter " << pathpair::eccentricity(b.graph(), 0) << "\n"
            << "pairs " << pairing.size() << "\n"
            << "max_route_length " << plan.max_route_length() << "\n"
            << "edges_used " << plan.edges_used() << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& plan_path, const GraphSource& src, const std::string& pairing_path,
               const std::string& output) {
  Json doc = read_json(plan_path);
  pathpair::Graph graph;
  if (!src.graph_path.empty() || !src.family.empty()) {
    graph = load_graph(src).graph;
  } else if (auto tag = pathpair::io::blown_cycle_tag(doc)) {
    graph = blown_cycle_checked(tag->m, tag->q).graph();
  } else {
    throw pathpair::io::ParseError("plan has no blown_cycle annotation; pass --graph");
  }
  pathpair::RoutePlan plan = pathpair::io::plan_from_json(doc);
  pathpair::Pairing pairing;
  if (!pairing_path.empty()) {
    pairing = pathpair::io::pairing_from_json(read_json(pairing_path));
  } else if (doc.contains("pairs")) {
    pairing = pathpair::io::pairing_from_json(Json{{"pairs", doc["pairs"]}});
  } else {
    std::vector<pathpair::TerminalPair> pairs;
    for (const auto& r : plan.routes) pairs.push_back({r.x, r.y});
    pairing = pathpair::Pairing(std::move(pairs));
  }
  auto report = pathpair::verify_plan(graph, pairing, plan);
  write_text(output, pathpair::io::report_to_json(report).dump() + "\n");
  return report.ok ? kExitOk : kExitNegative;
}

int cmd_decide(const GraphSource& src, const std::string& pairing_path, int workers,
               std::uint64_t budget, const std::string& output) {
  LoadedGraph loaded = load_graph(src);
  if (!pairing_path.empty()) {
    auto pairing = pathpair::io::pairing_from_json(read_json(pairing_path));
    auto result = pathpair::find_disjoint_paths(loaded.graph, pairing, budget);
    const char* status = result.outcome == pathpair::SearchOutcome::feasible     ? "feasible"
                         : result.outcome == pathpair::SearchOutcome::infeasible ? "infeasible"
                                                                                 : "cap-hit";
    Json out{{"status", status},
             {"nodes_expanded", result.nodes},
             {"plan", result.plan ? pathpair::io::plan_to_json(*result.plan) : Json(nullptr)}};
    write_text(output, out.dump() + "\n");
    switch (result.outcome) {
      case pathpair::SearchOutcome::feasible:
        return kExitOk;
      case pathpair::SearchOutcome::infeasible:
        return kExitNegative;
      case pathpair::SearchOutcome::cap_hit:
        return kExitInconclusive;
    }
  }
  auto verdict = pathpair::is_path_pairable(loaded.graph, {budget, workers});
  write_text(output, pathpair::io::verdict_to_json(verdict).dump() + "\n");
  switch (verdict.status) {
    case pathpair::PairabilityStatus::path_pairable:
      return kExitOk;
    case pathpair::PairabilityStatus::not_path_pairable:
      return kExitNegative;
    case pathpair::PairabilityStatus::inconclusive:
      return kExitInconclusive;
  }
  return kExitInconclusive;
}

int cmd_screen(const GraphSource& src, const std::string& output) {
  auto report = pathpair::screen(load_graph(src).graph);
  write_text(output, pathpair::io::screen_to_json(report).dump() + "\n");
  return report.verdict == pathpair::ScreenVerdict::cannot_rule_out ? kExitOk : kExitNegative;
}

int cmd_stats(const GraphSource& src, const std::string& output) {
  const pathpair::Graph g = load_graph(src).graph;
  const int d = pathpair::diameter(g);
  const double bound = 6.0 * std::sqrt(2.0) * std::sqrt(static_cast<double>(g.order()));
  std::ostringstream out;
  out << "n " << g.order() << "\n"
      << "edges " << g.size() << "\n"
      << "max_degree " << g.max_degree() << "\n"
      << "diameter " << d << "\n"
      << "diameter_bound_ratio " << d / bound << "\n";
  write_text(output, out.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Path-pairable graph toolkit"};
  app.require_subcommand(1);

  GraphSource src;
  std::string output;
  std::string format = "json";
  std::string pairing_path;
  std::string plan_path = "-";
  std::optional<std::uint64_t> seed;
  int workers = 0;
  std::uint64_t budget = pathpair::kDefaultSearchBudget;

  auto* generate = app.add_subcommand("generate", "emit a graph file");
  add_source_options(generate, src);
  generate->add_option("--format", format, "json|dot|edgelist")
      ->check(CLI::IsMember({"json", "dot", "edgelist"}));
  generate->add_option("-o,--output", output, "output file (default stdout)");

  auto* route = app.add_subcommand("route", "route a pairing through a blown cycle");
  add_source_options(route, src);
  route->add_option("--pairing", pairing_path, "pairing JSON file");
  route->add_option("--random", seed, "seed for a random perfect pairing");
  route->add_option("-o,--output", output, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "re-check a route plan");
  verify->add_option("plan", plan_path, "plan JSON file ('-' for stdin)");
  add_source_options(verify, src);
  verify->add_option("--pairing", pairing_path, "pairing JSON file");
  verify->add_option("-o,--output", output, "output file (default stdout)");

  auto* decide = app.add_subcommand("decide", "exhaustive path-pairability decision");
  add_source_options(decide, src);
  decide->add_option("--pairing", pairing_path, "decide a single pairing instead");
  decide->add_option("--workers", workers, "worker threads (0: all)");
  decide->add_option("--budget", budget, "node cap per pairing search");
  decide->add_option("-o,--output", output, "output file (default stdout)");

  auto* screen = app.add_subcommand("screen", "necessary-condition screener");
  add_source_options(screen, src);
  screen->add_option("-o,--output", output, "output file (default stdout)");

  auto* stats = app.add_subcommand("stats", "order, size, degree and diameter");
  add_source_options(stats, src);
  stats->add_option("-o,--output", output, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*generate) return cmd_generate(src, format, output);
    if (*route) return cmd_route(src, pairing_path, seed, output);
    if (*verify) return cmd_verify(plan_path, src, pairing_path, output);
    if (*decide) return cmd_decide(src, pairing_path, workers, budget, output);
    if (*screen) return cmd_screen(src, output);
    if (*stats) return cmd_stats(src, output);
  } catch (const pathpair::RoutingDefect& e) {
    std::cerr << "routing defect: " << e.what() << "\n";
    return kExitNegative;
  } catch (const pathpair::DisconnectedGraph& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const pathpair::io::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
