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

#include "pathpair/graph.hpp"

#include <algorithm>

namespace pathpair {

Graph Graph::from_edges(int n, std::span<const Edge> edges,
                        std::vector<std::string> labels) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  if (!labels.empty() && static_cast<int>(labels.size()) != n) {
    throw std::invalid_argument("label count " + std::to_string(labels.size()) +
                                " does not match vertex count " + std::to_string(n));
  }

  Graph g;
  g.n_ = n;
  g.edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n) {
      throw std::invalid_argument("edge (" + std::to_string(e.u) + "," +
                                  std::to_string(e.v) + ") has a vertex id out of range 0.." +
                                  std::to_string(n - 1));
    }
    if (e.u == e.v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    }
    g.edges_.push_back(e);
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

  g.offsets_.assign(n + 1, 0);
  for (const Edge& e : g.edges_) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (int v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];

  g.adjacency_.resize(2 * g.edges_.size());
  g.edge_ids_.resize(2 * g.edges_.size());
  std::vector<int> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // First pass writes the larger neighbors of each vertex, second pass the
  // smaller ones; both runs come out ascending because edges are sorted.
  for (EdgeId id = 0; id < static_cast<EdgeId>(g.edges_.size()); ++id) {
    const Edge& e = g.edges_[id];
    g.adjacency_[cursor[e.u]] = e.v;
    g.edge_ids_[cursor[e.u]++] = id;
  }
  for (EdgeId id = 0; id < static_cast<EdgeId>(g.edges_.size()); ++id) {
    const Edge& e = g.edges_[id];
    g.adjacency_[cursor[e.v]] = e.u;
    g.edge_ids_[cursor[e.v]++] = id;
  }
  for (int v = 0; v < n; ++v) {
    auto first = g.adjacency_.begin() + g.offsets_[v];
    auto last = g.adjacency_.begin() + g.offsets_[v + 1];
    auto ids = g.edge_ids_.begin() + g.offsets_[v];
    auto split = std::partition_point(first, last, [v](VertexId w) { return w > v; });
    std::rotate(first, split, last);
    std::rotate(ids, ids + (split - first), ids + (last - first));
  }
  g.labels_ = std::move(labels);
  return g;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

std::optional<EdgeId> Graph::edge_id(VertexId a, VertexId b) const {
  if (!contains(a) || !contains(b) || a == b) return std::nullopt;
  auto nbrs = neighbors(a);
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), b);
  if (it == nbrs.end() || *it != b) return std::nullopt;
  return incident_edges(a)[it - nbrs.begin()];
}

std::string Graph::label(VertexId v) const {
  if (labels_.empty()) return std::to_string(v);
  return labels_[v];
}

}  // namespace pathpair
