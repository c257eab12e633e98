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

#ifndef PATHPAIR_METRICS_HPP_
#define PATHPAIR_METRICS_HPP_

#include <span>
#include <vector>

#include "pathpair/graph.hpp"

namespace pathpair {

/// BFS distance layers from a root: sizes[i] = |{z : dist(root, z) = i}| and
/// prefix[i] = sizes[0] + ... + sizes[i].
struct LayerProfile {
  VertexId root = 0;
  std::vector<int> sizes;
  std::vector<int> prefix;

  int depth() const { return static_cast<int>(sizes.size()) - 1; }
};

/// Distances from root; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, VertexId root);

/// Throws DisconnectedGraph naming an unreachable vertex.
LayerProfile bfs_layers(const Graph& g, VertexId root);

/// Max distance from v. Throws DisconnectedGraph.
int eccentricity(const Graph& g, VertexId v);

/// Eccentricity of every vertex, one BFS per vertex spread over OpenMP
/// threads.
std::vector<int> eccentricities(const Graph& g);
std::vector<int> eccentricities_serial(const Graph& g);

/// Exact diameter by BFS from every vertex. Both versions throw
/// DisconnectedGraph and must agree on every input.
int diameter(const Graph& g);
int diameter_serial(const Graph& g);

/// Number of edges with exactly one endpoint in side. The side must be a
/// non-empty proper subset of the vertices (duplicates are ignored).
std::size_t edge_cut_size(const Graph& g, std::span<const VertexId> side);

/// Edges joining layer t to layer t+1 of a distance labelling.
std::size_t layer_cut_size(const Graph& g, std::span<const int> dist, int t);
/// All consecutive-layer cuts at once: entry t counts edges between layers t
/// and t+1, for t in 0..max(dist)-1.
std::vector<std::size_t> layer_cut_sizes(const Graph& g, std::span<const int> dist);

}  // namespace pathpair

#endif  // PATHPAIR_METRICS_HPP_
