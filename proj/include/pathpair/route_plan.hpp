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

#ifndef PATHPAIR_ROUTE_PLAN_HPP_
#define PATHPAIR_ROUTE_PLAN_HPP_

#include <cstddef>
#include <vector>

#include "pathpair/graph.hpp"

namespace pathpair {

/// Walk joining the terminals of one pair, starting at x and ending at y.
struct Route {
  VertexId x = 0;
  VertexId y = 0;
  std::vector<VertexId> path;

  int length() const { return path.empty() ? 0 : static_cast<int>(path.size()) - 1; }
  friend bool operator==(const Route&, const Route&) = default;
};

struct EdgeUse {
  Edge edge;
  std::size_t owner = 0;  // index into RoutePlan::routes

  friend bool operator==(const EdgeUse&, const EdgeUse&) = default;
};

/// Joining walks for a pairing, routes[i] serving pair i of the pairing.
struct RoutePlan {
  std::vector<Route> routes;
  /// Every consumed edge with the route that owns it, sorted by edge.
  std::vector<EdgeUse> used_edges;

  /// Builds used_edges from the routes' consecutive vertices.
  static RoutePlan from_routes(std::vector<Route> routes);

  std::size_t edges_used() const { return used_edges.size(); }
  int max_route_length() const;

  friend bool operator==(const RoutePlan&, const RoutePlan&) = default;
};

}  // namespace pathpair

#endif  // PATHPAIR_ROUTE_PLAN_HPP_
