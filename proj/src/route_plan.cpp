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

#include "pathpair/route_plan.hpp"

#include <algorithm>

namespace pathpair {

RoutePlan RoutePlan::from_routes(std::vector<Route> routes) {
  RoutePlan plan;
  plan.routes = std::move(routes);
  for (std::size_t i = 0; i < plan.routes.size(); ++i) {
    const auto& path = plan.routes[i].path;
    for (std::size_t k = 1; k < path.size(); ++k) {
      plan.used_edges.push_back({Edge(path[k - 1], path[k]), i});
    }
  }
  std::sort(plan.used_edges.begin(), plan.used_edges.end(),
            [](const EdgeUse& a, const EdgeUse& b) {
              return a.edge != b.edge ? a.edge < b.edge : a.owner < b.owner;
            });
  return plan;
}

int RoutePlan::max_route_length() const {
  int best = 0;
  for (const Route& r : routes) best = std::max(best, r.length());
  return best;
}

}  // namespace pathpair
