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

#ifndef PATHPAIR_GRAPH_HPP_
#define PATHPAIR_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pathpair {

using VertexId = int;
using EdgeId = int;

/// Undirected edge stored with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  Edge() = default;
  Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Raised by metrics that require a connected graph.
class DisconnectedGraph : public std::runtime_error {
 public:
  explicit DisconnectedGraph(VertexId unreachable)
      : std::runtime_error("graph is disconnected: vertex " +
                           std::to_string(unreachable) + " is unreachable"),
        unreachable_(unreachable) {}

  VertexId unreachable() const { return unreachable_; }

 private:
  VertexId unreachable_;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is kept in CSR form with neighbor lists sorted ascending; every
/// adjacency slot also carries the id of its edge (the index into edges()),
/// so searches can keep per-edge state in flat arrays.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph, collapsing duplicate edges. Throws std::invalid_argument
  /// on out-of-range ids or self-loops.
  static Graph from_edges(int n, std::span<const Edge> edges,
                          std::vector<std::string> labels = {});

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  /// Edge ids parallel to neighbors(v).
  std::span<const EdgeId> incident_edges(VertexId v) const {
    return {edge_ids_.data() + offsets_[v], edge_ids_.data() + offsets_[v + 1]};
  }
  int degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  int max_degree() const;

  bool has_edge(VertexId a, VertexId b) const { return edge_id(a, b).has_value(); }
  std::optional<EdgeId> edge_id(VertexId a, VertexId b) const;

  /// Sorted lexicographically, each with u < v.
  const std::vector<Edge>& edges() const { return edges_; }

  bool contains(VertexId v) const { return v >= 0 && v < n_; }

  bool has_labels() const { return !labels_.empty(); }
  /// Display label; falls back to the decimal id.
  std::string label(VertexId v) const;
  const std::vector<std::string>& labels() const { return labels_; }

  /// Structural equality: same order and edge set. Labels are ignored.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_{0};
  std::vector<VertexId> adjacency_;
  std::vector<EdgeId> edge_ids_;
  std::vector<std::string> labels_;
};

/// Convenience wrapper over Graph::from_edges.
inline Graph make_graph(int n, std::span<const Edge> edges) {
  return Graph::from_edges(n, edges);
}

}  // namespace pathpair

#endif  // PATHPAIR_GRAPH_HPP_
