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

#include <algorithm>
#include <numeric>
#include <random>

#include "pathpair/blown_cycle.hpp"
#include "pathpair/generators.hpp"
#include "pathpair/graph.hpp"
#include "pathpair/metrics.hpp"
#include "test_support.hpp"

using namespace pathpair;

TEST_CASE("make_graph builds C4") {
  std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  Graph g = make_graph(4, edges);
  CHECK(g.order() == 4);
  CHECK(g.size() == 4);
  for (VertexId v = 0; v < 4; ++v) CHECK(g.degree(v) == 2);
  CHECK(g.has_edge(3, 0));
  CHECK_FALSE(g.has_edge(0, 2));
}

TEST_CASE("make_graph collapses duplicate edges") {
  std::vector<Edge> edges{{0, 1}, {1, 0}};
  Graph g = make_graph(2, edges);
  CHECK(g.size() == 1);
  CHECK(g.degree(0) == 1);
  CHECK(g.degree(1) == 1);
}

TEST_CASE("make_graph rejects bad input") {
  std::vector<Edge> out_of_range{{0, 3}};
  CHECK_THROWS_AS(make_graph(3, out_of_range), std::invalid_argument);
  std::vector<Edge> loop{{1, 1}};
  CHECK_THROWS_AS(make_graph(3, loop), std::invalid_argument);
  std::vector<Edge> negative{{-1, 2}};
  CHECK_THROWS_AS(make_graph(3, negative), std::invalid_argument);
}

TEST_CASE("adjacency is sorted, symmetric and matches edge ids") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = testing::random_graph(12, 0.4, rng);
    std::size_t slots = 0;
    for (VertexId v = 0; v < g.order(); ++v) {
      auto nbrs = g.neighbors(v);
      auto ids = g.incident_edges(v);
      CHECK(std::is_sorted(nbrs.begin(), nbrs.end()));
      CHECK(std::adjacent_find(nbrs.begin(), nbrs.end()) == nbrs.end());
      for (std::size_t k = 0; k < nbrs.size(); ++k) {
        CHECK(g.has_edge(nbrs[k], v));
        CHECK(g.edges()[ids[k]] == Edge(v, nbrs[k]));
      }
      slots += nbrs.size();
    }
    CHECK(slots == 2 * g.size());  // handshake
  }
}

TEST_CASE("generate: named families") {
  SUBCASE("hypercube(3)") {
    Graph q3 = generate({Family::hypercube, {3}});
    CHECK(q3.order() == 8);
    CHECK(q3.size() == 12);
    for (VertexId v = 0; v < 8; ++v) CHECK(q3.degree(v) == 3);
    CHECK(q3.label(5) == "101");
    CHECK(q3.has_edge(5, 4));  // differ in bit 0
  }
  SUBCASE("petersen") {
    Graph p = generate({Family::petersen, {}});
    CHECK(p.order() == 10);
    CHECK(p.size() == 15);
    for (VertexId v = 0; v < 10; ++v) CHECK(p.degree(v) == 3);
    CHECK(testing::girth_brute_force(p) == 5);
    CHECK(p.has_edge(2, 7));  // spoke
    CHECK(p.has_edge(5, 7));  // pentagram
  }
  SUBCASE("grid2(3,4)") {
    Graph g = generate({Family::grid2, {3, 4}});
    CHECK(g.order() == 12);
    for (VertexId v = 0; v < 12; ++v) CHECK(g.degree(v) == (3 - 1) + (4 - 1));
    CHECK(g.label(7) == "(1,3)");
    CHECK(g.has_edge(7, 3));   // same column
    CHECK(g.has_edge(7, 4));   // same row
    CHECK_FALSE(g.has_edge(7, 0));
  }
  SUBCASE("grid3(2,2,3)") {
    Graph g = generate({Family::grid3, {2, 2, 3}});
    CHECK(g.order() == 12);
    for (VertexId v = 0; v < 12; ++v) CHECK(g.degree(v) == 1 + 1 + 2);
  }
  SUBCASE("complete and complete bipartite") {
    CHECK(generate({Family::complete, {6}}).size() == 15);
    Graph k = generate({Family::complete_bipartite, {3, 5}});
    CHECK(k.size() == 15);
    CHECK(k.has_edge(0, 3));
    CHECK_FALSE(k.has_edge(0, 1));
  }
  SUBCASE("invalid parameters") {
    CHECK_THROWS_AS(generate({Family::complete_bipartite, {0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(generate({Family::hypercube, {0}}), std::invalid_argument);
    CHECK_THROWS_AS(generate({Family::cycle, {2}}), std::invalid_argument);
    CHECK_THROWS_AS(generate({Family::grid2, {3}}), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("moebius"), std::invalid_argument);
  }
  SUBCASE("family names round-trip") {
    for (Family f : {Family::cycle, Family::path, Family::complete, Family::complete_bipartite,
                     Family::hypercube, Family::petersen, Family::grid2, Family::grid3}) {
      CHECK(parse_family(family_name(f)) == f);
    }
  }
}

TEST_CASE("bfs_layers") {
  CHECK(bfs_layers(path_graph(5), 0).sizes == std::vector<int>{1, 1, 1, 1, 1});
  for (VertexId r = 0; r < 4; ++r) CHECK(bfs_layers(cycle_graph(4), r).sizes == std::vector<int>{1, 2, 1});
  BlownCycle b = BlownCycle::build(2);
  for (VertexId r : {0, 17, 43}) {
    LayerProfile p = bfs_layers(b.graph(), r);
    CHECK(p.sizes == std::vector<int>{1, 22, 21});
    CHECK(p.prefix == std::vector<int>{1, 23, 44});
  }
  std::vector<Edge> split{{0, 1}, {2, 3}};
  Graph disconnected = make_graph(4, split);
  try {
    bfs_layers(disconnected, 0);
    FAIL("expected DisconnectedGraph");
  } catch (const DisconnectedGraph& e) {
    CHECK(e.unreachable() == 2);
  }
}

TEST_CASE("diameter") {
  CHECK(diameter(cycle_graph(6)) == 3);
  CHECK(diameter(hypercube_graph(3)) == 3);
  CHECK(diameter(BlownCycle::build(3).graph()) == 3);
  CHECK(diameter(petersen_graph()) == 2);
  std::vector<Edge> split{{0, 1}, {2, 3}};
  CHECK_THROWS_AS(diameter(make_graph(4, split)), DisconnectedGraph);
  CHECK_THROWS_AS(diameter_serial(make_graph(4, split)), DisconnectedGraph);
}

TEST_CASE("parallel and serial eccentricities agree") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = testing::random_connected_graph(40, 0.05, rng);
    CHECK(eccentricities(g) == eccentricities_serial(g));
    CHECK(diameter(g) == diameter_serial(g));
  }
}

TEST_CASE("edge_cut_size") {
  std::vector<VertexId> one{0};
  CHECK(edge_cut_size(cycle_graph(4), one) == 2);
  std::vector<VertexId> half{0, 1, 2, 3, 4};
  CHECK(edge_cut_size(path_graph(10), half) == 1);
  BlownCycle b = BlownCycle::build(2);
  std::vector<VertexId> two_classes(22);
  std::iota(two_classes.begin(), two_classes.end(), 0);
  CHECK(edge_cut_size(b.graph(), two_classes) == 242);

  std::vector<VertexId> none;
  CHECK_THROWS_AS(edge_cut_size(cycle_graph(4), none), std::invalid_argument);
  std::vector<VertexId> all{0, 1, 2, 3};
  CHECK_THROWS_AS(edge_cut_size(cycle_graph(4), all), std::invalid_argument);
}

TEST_CASE("property: layer structure and cut symmetry on random graphs") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 6 + trial % 20;
    Graph g = testing::random_connected_graph(n, 0.15, rng);

    std::size_t degree_sum = 0;
    for (VertexId v = 0; v < n; ++v) degree_sum += g.degree(v);
    CHECK(degree_sum == 2 * g.size());

    int deepest = 0;
    for (VertexId r = 0; r < n; ++r) {
      LayerProfile p = bfs_layers(g, r);
      CHECK(p.sizes.front() == 1);
      CHECK(p.prefix.back() == n);
      CHECK(std::is_sorted(p.prefix.begin(), p.prefix.end(), std::less_equal<>()));
      std::vector<int> dist = bfs_distances(g, r);
      for (const Edge& e : g.edges()) CHECK(std::abs(dist[e.u] - dist[e.v]) <= 1);
      deepest = std::max(deepest, p.depth());
    }
    CHECK(deepest == diameter(g));

    std::vector<VertexId> side, rest;
    std::bernoulli_distribution coin(0.5);
    for (VertexId v = 0; v < n; ++v) (coin(rng) ? side : rest).push_back(v);
    if (side.empty() || rest.empty()) continue;
    CHECK(edge_cut_size(g, side) == edge_cut_size(g, rest));
  }
}

TEST_CASE("layer_cut_sizes matches per-layer counts") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = testing::random_connected_graph(25, 0.1, rng);
    std::vector<int> dist = bfs_distances(g, 0);
    std::vector<std::size_t> cuts = layer_cut_sizes(g, dist);
    REQUIRE(static_cast<int>(cuts.size()) == eccentricity(g, 0));
    for (int t = 0; t < static_cast<int>(cuts.size()); ++t) CHECK(cuts[t] == layer_cut_size(g, dist, t));
  }
}
