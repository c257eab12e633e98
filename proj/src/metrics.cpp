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

#include "pathpair/metrics.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pathpair {
namespace {

void check_vertex(const Graph& g, VertexId v) {
  if (!g.contains(v)) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
  }
}

// BFS reusing caller-owned buffers; returns eccentricity or throws.
int bfs_eccentricity(const Graph& g, VertexId root, std::vector<int>& dist,
                     std::vector<VertexId>& queue) {
  std::fill(dist.begin(), dist.end(), -1);
  queue.clear();
  dist[root] = 0;
  queue.push_back(root);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    VertexId u = queue[head];
    for (VertexId w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  if (static_cast<int>(queue.size()) != g.order()) {
    auto it = std::find(dist.begin(), dist.end(), -1);
    throw DisconnectedGraph(static_cast<VertexId>(it - dist.begin()));
  }
  return dist[queue.back()];
}

}  // namespace

std::vector<int> bfs_distances(const Graph& g, VertexId root) {
  check_vertex(g, root);
  std::vector<int> dist(g.order(), -1);
  std::vector<VertexId> queue{root};
  dist[root] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    VertexId u = queue[head];
    for (VertexId w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

LayerProfile bfs_layers(const Graph& g, VertexId root) {
  std::vector<int> dist = bfs_distances(g, root);
  LayerProfile profile;
  profile.root = root;
  for (VertexId v = 0; v < g.order(); ++v) {
    if (dist[v] < 0) throw DisconnectedGraph(v);
    if (dist[v] >= static_cast<int>(profile.sizes.size())) profile.sizes.resize(dist[v] + 1, 0);
    ++profile.sizes[dist[v]];
  }
  profile.prefix.resize(profile.sizes.size());
  int running = 0;
  for (std::size_t i = 0; i < profile.sizes.size(); ++i) {
    running += profile.sizes[i];
    profile.prefix[i] = running;
  }
  return profile;
}

int eccentricity(const Graph& g, VertexId v) {
  check_vertex(g, v);
  std::vector<int> dist(g.order());
  std::vector<VertexId> queue;
  queue.reserve(g.order());
  return bfs_eccentricity(g, v, dist, queue);
}

std::vector<int> eccentricities_serial(const Graph& g) {
  std::vector<int> ecc(g.order());
  std::vector<int> dist(g.order());
  std::vector<VertexId> queue;
  queue.reserve(g.order());
  for (VertexId v = 0; v < g.order(); ++v) ecc[v] = bfs_eccentricity(g, v, dist, queue);
  return ecc;
}

std::vector<int> eccentricities(const Graph& g) {
  const int n = g.order();
  std::vector<int> ecc(n);
  // An exception cannot cross the parallel region; remember the witness of
  // the lowest failing root instead.
  VertexId unreachable = -1;
  VertexId failing_root = n;
#pragma omp parallel
  {
    std::vector<int> dist(n);
    std::vector<VertexId> queue;
    queue.reserve(n);
#pragma omp for schedule(dynamic, 16)
    for (VertexId v = 0; v < n; ++v) {
      try {
        ecc[v] = bfs_eccentricity(g, v, dist, queue);
      } catch (const DisconnectedGraph& e) {
#pragma omp critical(pathpair_ecc_failure)
        {
          if (v < failing_root) {
            failing_root = v;
            unreachable = e.unreachable();
          }
        }
      }
    }
  }
  if (unreachable >= 0) throw DisconnectedGraph(unreachable);
  return ecc;
}

int diameter(const Graph& g) {
  if (g.order() == 0) return 0;
  std::vector<int> ecc = eccentricities(g);
  return *std::max_element(ecc.begin(), ecc.end());
}

int diameter_serial(const Graph& g) {
  if (g.order() == 0) return 0;
  std::vector<int> ecc = eccentricities_serial(g);
  return *std::max_element(ecc.begin(), ecc.end());
}

std::size_t edge_cut_size(const Graph& g, std::span<const VertexId> side) {
  std::vector<char> inside(g.order(), 0);
  int count = 0;
  for (VertexId v : side) {
    check_vertex(g, v);
    if (!inside[v]) {
      inside[v] = 1;
      ++count;
    }
  }
  if (count == 0 || count == g.order()) {
    throw std::invalid_argument("cut side must be a non-empty proper subset of the vertices");
  }
  std::size_t cut = 0;
  for (const Edge& e : g.edges()) cut += inside[e.u] != inside[e.v];
  return cut;
}

std::size_t layer_cut_size(const Graph& g, std::span<const int> dist, int t) {
  std::size_t cut = 0;
  for (const Edge& e : g.edges()) {
    int a = dist[e.u], b = dist[e.v];
    if ((a == t && b == t + 1) || (a == t + 1 && b == t)) ++cut;
  }
  return cut;
}

std::vector<std::size_t> layer_cut_sizes(const Graph& g, std::span<const int> dist) {
  int depth = 0;
  for (int d : dist) depth = std::max(depth, d);
  std::vector<std::size_t> cuts(depth, 0);
  for (const Edge& e : g.edges()) {
    int a = dist[e.u], b = dist[e.v];
    if (a >= 0 && b >= 0 && a != b) ++cuts[std::min(a, b)];
  }
  return cuts;
}

}  // namespace pathpair
