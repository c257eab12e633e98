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

#include "pathpair/verifier.hpp"

#include <algorithm>
#include <map>

namespace pathpair {

std::string_view violation_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::not_a_walk:
      return "not-a-walk";
    case ViolationKind::wrong_endpoints:
      return "wrong-endpoints";
    case ViolationKind::edge_reused:
      return "edge-reused";
    case ViolationKind::endpoint_not_in_pairing:
      return "endpoint-not-in-pairing";
  }
  return "unknown";
}

VerificationReport verify_plan(const Graph& g, const Pairing& p, const RoutePlan& plan) {
  VerificationReport report;
  auto add = [&](Violation v) { report.violations.push_back(std::move(v)); };

  // One route per pair; extra routes have no pair to serve.
  for (std::size_t i = plan.routes.size(); i < p.size(); ++i) {
    add({ViolationKind::endpoint_not_in_pairing, {i}, std::nullopt, p[i].x});
  }

  std::map<Edge, std::size_t> owner;
  for (std::size_t i = 0; i < plan.routes.size(); ++i) {
    const Route& r = plan.routes[i];
    if (i >= p.size()) {
      add({ViolationKind::endpoint_not_in_pairing, {i}, std::nullopt, r.x});
      continue;
    }
    const TerminalPair& want = p[i];
    bool same = r.x == want.x && r.y == want.y;
    bool swapped = r.x == want.y && r.y == want.x;
    if (!same && !swapped) {
      VertexId stray = (r.x != want.x && r.x != want.y) ? r.x : r.y;
      add({ViolationKind::endpoint_not_in_pairing, {i}, std::nullopt, stray});
    }
    if (r.path.empty()) {
      add({ViolationKind::wrong_endpoints, {i}, std::nullopt, std::nullopt});
      continue;
    }
    VertexId first = r.path.front(), last = r.path.back();
    bool ends_ok = (first == want.x && last == want.y) || (first == want.y && last == want.x);
    if (!ends_ok) {
      add({ViolationKind::wrong_endpoints, {i}, std::nullopt,
           (first != want.x && first != want.y) ? first : last});
    }

    for (VertexId v : r.path) {
      if (!g.contains(v)) {
        add({ViolationKind::not_a_walk, {i}, std::nullopt, v});
      }
    }
    std::vector<VertexId> seen;
    for (std::size_t k = 0; k < r.path.size(); ++k) {
      VertexId v = r.path[k];
      if (!g.contains(v)) continue;
      if (std::find(seen.begin(), seen.end(), v) != seen.end()) {
        report.warnings.push_back({i, v});
      } else {
        seen.push_back(v);
      }
      if (k == 0) continue;
      VertexId prev = r.path[k - 1];
      if (!g.contains(prev)) continue;
      if (!g.has_edge(prev, v)) {
        add({ViolationKind::not_a_walk, {i}, Edge(prev, v), std::nullopt});
        continue;
      }
      Edge e(prev, v);
      auto [it, inserted] = owner.emplace(e, i);
      if (!inserted) add({ViolationKind::edge_reused, {it->second, i}, e, std::nullopt});
    }
  }
  report.ok = report.violations.empty();
  return report;
}

}  // namespace pathpair
