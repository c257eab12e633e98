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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numeric>
#include <random>

#include "pathpair/blown_cycle.hpp"
#include "pathpair/generators.hpp"
#include "pathpair/pairability.hpp"
#include "pathpair/screen.hpp"
#include "pathpair/verifier.hpp"
#include "test_support.hpp"

using namespace pathpair;

namespace {

Pairing antipodal(int dim) {
  std::vector<TerminalPair> pairs;
  const int n = 1 << dim;
  for (int v = 0; v < n / 2; ++v) pairs.push_back({v, v ^ (n - 1)});
  return Pairing(pairs);
}

// Feasibility by brute force over every assignment of edges to pairs (or to
// nobody): the pairing is routable iff some assignment gives each pair an
// edge set connecting its terminals.
bool feasible_by_edge_assignment(const Graph& g, const Pairing& p) {
  const int k = static_cast<int>(p.size());
  const int m = static_cast<int>(g.size());
  std::vector<int> owner(m, 0);  // 0 = unused, i+1 = pair i
  auto connected = [&](int pair) {
    std::vector<int> parent(g.order());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (int e = 0; e < m; ++e) {
      if (owner[e] == pair + 1) parent[find(g.edges()[e].u)] = find(g.edges()[e].v);
    }
    return find(p[pair].x) == find(p[pair].y);
  };
  for (;;) {
    bool all = true;
    for (int i = 0; i < k && all; ++i) all = connected(i);
    if (all) return true;
    int e = 0;
    while (e < m && owner[e] == k) owner[e++] = 0;
    if (e == m) return false;
    ++owner[e];
  }
}

Graph two_cliques_with_path() {
  // K5 (0..4) - path 5..14 - K5 (15..19), attached at 4-5 and 14-15.
  std::vector<Edge> edges;
  for (int base : {0, 15})
    for (int u = 0; u < 5; ++u)
      for (int v = u + 1; v < 5; ++v) edges.emplace_back(base + u, base + v);
  for (int v = 4; v < 15; ++v) edges.emplace_back(v, v + 1);
  return make_graph(20, edges);
}

}  // namespace

TEST_CASE("perfect pairing counts") {
  CHECK(perfect_pairing_count(8) == 105);
  CHECK(perfect_pairing_count(10) == 945);
  CHECK(perfect_pairing_count(12) == 10395);
  CHECK(perfect_pairing_count(7) == 0);
  for (int n : {2, 4, 6, 8, 10}) {
    std::uint64_t seen = 0;
    bool canonical_first = true;
    for_each_perfect_pairing(n, [&](const Pairing& p) {
      if (seen == 0) canonical_first = p[0] == TerminalPair{0, 1};
      CHECK(p.is_perfect_for(n));
      ++seen;
      return true;
    });
    CHECK(seen == perfect_pairing_count(n));
    CHECK(canonical_first);
  }
}

TEST_CASE("find_disjoint_paths: reference instances") {
  SUBCASE("C4 antipodal is infeasible") {
    auto r = find_disjoint_paths(cycle_graph(4), Pairing({{0, 2}, {1, 3}}));
    CHECK(r.outcome == SearchOutcome::infeasible);
    CHECK_FALSE(r.plan);
  }
  SUBCASE("Q3 antipodal is feasible") {
    Graph q3 = hypercube_graph(3);
    Pairing p = antipodal(3);
    auto r = find_disjoint_paths(q3, p);
    REQUIRE(r.outcome == SearchOutcome::feasible);
    CHECK(verify_plan(q3, p, *r.plan).ok);
  }
  SUBCASE("Q4 antipodal is infeasible by exhaustion") {
    Graph q4 = hypercube_graph(4);
    CHECK(q4.size() == 32);
    auto r = find_disjoint_paths(q4, antipodal(4));
    CHECK(r.outcome == SearchOutcome::infeasible);
    CHECK(r.nodes < kDefaultSearchBudget);
  }
  SUBCASE("tiny budget reports cap-hit") {
    auto r = find_disjoint_paths(hypercube_graph(4), antipodal(4), 10);
    CHECK(r.outcome == SearchOutcome::cap_hit);
  }
  SUBCASE("endpoint outside the graph") {
    CHECK_THROWS_AS(find_disjoint_paths(cycle_graph(4), Pairing({{0, 9}})), std::invalid_argument);
  }
  SUBCASE("disconnected terminals") {
    std::vector<Edge> split{{0, 1}, {2, 3}};
    auto r = find_disjoint_paths(make_graph(4, split), Pairing({{0, 2}}));
    CHECK(r.outcome == SearchOutcome::infeasible);
  }
}

TEST_CASE("find_disjoint_paths agrees with edge-assignment brute force") {
  std::mt19937_64 rng(77);
  int feasible = 0, infeasible = 0;
  for (int trial = 0; trial < 80; ++trial) {
    Graph g = testing::random_graph(6, 0.4, rng);
    if (g.size() > 9) continue;
    Pairing p = random_perfect_pairing(6, rng());
    auto r = find_disjoint_paths(g, p);
    bool expected = feasible_by_edge_assignment(g, p);
    CHECK((r.outcome == SearchOutcome::feasible) == expected);
    if (r.plan) CHECK(verify_plan(g, p, *r.plan).ok);
    (expected ? feasible : infeasible)++;
  }
  CHECK(feasible > 0);
  CHECK(infeasible > 0);
}

TEST_CASE("is_path_pairable: reference graphs") {
  SUBCASE("Q3") {
    Verdict v = is_path_pairable(hypercube_graph(3));
    CHECK(v.status == PairabilityStatus::path_pairable);
    CHECK(v.pairings_examined == 105);
  }
  SUBCASE("Petersen") {
    Verdict v = is_path_pairable(petersen_graph());
    CHECK(v.status == PairabilityStatus::path_pairable);
    CHECK(v.pairings_examined == 945);
  }
  SUBCASE("C4") {
    Verdict v = is_path_pairable(cycle_graph(4));
    CHECK(v.status == PairabilityStatus::not_path_pairable);
    REQUIRE(v.witness);
    CHECK(*v.witness == Pairing({{0, 2}, {1, 3}}));
  }
  SUBCASE("complete bipartite") {
    CHECK(is_path_pairable(complete_bipartite_graph(3, 3)).status == PairabilityStatus::path_pairable);
    CHECK(is_path_pairable(complete_bipartite_graph(1, 3)).status == PairabilityStatus::path_pairable);
    CHECK(is_path_pairable(complete_bipartite_graph(2, 2)).status ==
          PairabilityStatus::not_path_pairable);
    CHECK(is_path_pairable(complete_bipartite_graph(2, 4)).status ==
          PairabilityStatus::not_path_pairable);
  }
  SUBCASE("grid2(2,3)") {
    Verdict v = is_path_pairable(grid2_graph(2, 3));
    CHECK(v.status == PairabilityStatus::path_pairable);
    CHECK(v.pairings_examined == 15);
  }
  SUBCASE("guards") {
    CHECK_THROWS_AS(is_path_pairable(complete_graph(5)), std::invalid_argument);
    CHECK_THROWS_AS(is_path_pairable(hypercube_graph(4)), std::invalid_argument);
    CHECK_THROWS_AS(is_path_pairable_serial(complete_graph(7)), std::invalid_argument);
  }
  SUBCASE("budget exhaustion is inconclusive, never a wrong verdict") {
    Verdict v = is_path_pairable(petersen_graph(), {1, 0});
    CHECK(v.status == PairabilityStatus::inconclusive);
    CHECK_FALSE(v.witness);
  }
}

TEST_CASE("parallel decision matches the serial reference") {
  std::mt19937_64 rng(3);
  std::vector<Graph> graphs{cycle_graph(6), complete_bipartite_graph(2, 4), grid2_graph(2, 4),
                            petersen_graph(), hypercube_graph(3)};
  for (int i = 0; i < 12; ++i) graphs.push_back(testing::random_connected_graph(8, 0.35, rng));
  for (const Graph& g : graphs) {
    Verdict serial = is_path_pairable_serial(g);
    for (int workers : {1, 2, 4}) {
      Verdict parallel = is_path_pairable(g, {kDefaultSearchBudget, workers});
      CHECK(parallel.status == serial.status);
      CHECK(parallel.witness == serial.witness);
      CHECK(parallel.pairings_examined == serial.pairings_examined);
      CHECK(parallel.nodes_expanded == serial.nodes_expanded);
    }
  }
}

TEST_CASE("monotonicity: adding an edge keeps feasible instances feasible") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = testing::random_connected_graph(8, 0.2, rng);
    Pairing p = random_perfect_pairing(8, rng());
    if (find_disjoint_paths(g, p).outcome != SearchOutcome::feasible) continue;
    std::vector<Edge> edges = g.edges();
    std::uniform_int_distribution<int> pick(0, 7);
    int u = pick(rng), v = pick(rng);
    if (u == v) continue;
    edges.emplace_back(u, v);
    CHECK(find_disjoint_paths(make_graph(8, edges), p).outcome == SearchOutcome::feasible);
  }
}

TEST_CASE("screen") {
  SUBCASE("P_20 fails a layer cut") {
    ScreenReport r = screen(path_graph(20));
    CHECK(r.verdict == ScreenVerdict::not_path_pairable);
    REQUIRE_FALSE(r.roots.empty());
    bool found = false;
    for (const auto& v : r.roots.front().layer_cut) {
      if (v.t == 4) {
        CHECK(v.cut == 1);
        CHECK(v.required == 5);
        found = true;
      }
    }
    CHECK(found);
  }
  SUBCASE("star K_{1,9} passes") {
    ScreenReport r = screen(complete_bipartite_graph(1, 9));
    CHECK(r.verdict == ScreenVerdict::cannot_rule_out);
    CHECK(r.roots.size() == 9);  // the leaves are the diametral vertices
  }
  SUBCASE("blown cycles pass with slack on the diameter bound") {
    for (int m = 2; m <= 6; ++m) {
      BlownCycle b = BlownCycle::build(m);
      ScreenReport r = screen(b.graph());
      CHECK(r.verdict == ScreenVerdict::cannot_rule_out);
      CHECK(r.diameter == m);
      CHECK(r.diameter < r.diameter_bound);
    }
  }
  SUBCASE("lollipop triggers the layer-pair condition") {
    // Path 0..7 with vertex 7 joined to every vertex of a K10 on 8..17.
    std::vector<Edge> edges;
    for (int v = 0; v < 7; ++v) edges.emplace_back(v, v + 1);
    for (int u = 8; u < 18; ++u) {
      edges.emplace_back(7, u);
      for (int v = u + 1; v < 18; ++v) edges.emplace_back(u, v);
    }
    ScreenReport r = screen(make_graph(18, edges));
    CHECK(r.verdict == ScreenVerdict::not_path_pairable);
    CHECK(r.roots.size() == 11);  // vertex 0 and the ten clique vertices
    REQUIRE(r.roots[0].profile.root == 0);
    REQUIRE(r.roots[0].layer_pair.size() == 1);
    CHECK(r.roots[0].layer_pair[0].k == 3);
    CHECK(r.roots[0].layer_pair[0].layer_sum == 2);
    CHECK(r.roots[0].layer_pair[0].prefix == 8);
    CHECK(r.reason.rfind("layer-pair", 0) == 0);
  }
  SUBCASE("two K5 joined by a path") {
    CHECK(screen(two_cliques_with_path()).verdict == ScreenVerdict::not_path_pairable);
  }
  SUBCASE("long cycles exceed the diameter bound") {
    // C_{2k}: d = k, n = 2k, so d > 6*sqrt(2n) once k > 288.
    ScreenReport r = screen(cycle_graph(600));
    REQUIRE(r.diameter_violation);
    CHECK(r.diameter_violation->diameter == 300);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(screen(path_graph(5)), std::invalid_argument);
    std::vector<Edge> split{{0, 1}, {2, 3}};
    CHECK_THROWS_AS(screen(make_graph(4, split)), DisconnectedGraph);
  }
}

TEST_CASE("screen never rejects a graph the exhaustive decision accepts") {
  std::vector<Graph> accepted{hypercube_graph(3), petersen_graph(), complete_bipartite_graph(3, 3),
                              complete_bipartite_graph(1, 3), grid2_graph(2, 3)};
  std::mt19937_64 rng(8);
  for (int i = 0; i < 25; ++i) {
    Graph g = testing::random_connected_graph(8, 0.3, rng);
    if (is_path_pairable(g).status == PairabilityStatus::path_pairable) accepted.push_back(g);
  }
  for (const Graph& g : accepted) {
    CHECK(is_path_pairable(g).status == PairabilityStatus::path_pairable);
    CHECK(screen(g).verdict == ScreenVerdict::cannot_rule_out);
  }
}
