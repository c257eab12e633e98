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

#include "pathpair/router.hpp"

#include <algorithm>
#include <string>

namespace pathpair {
namespace {

int mod(int a, int b) {
  int r = a % b;
  return r < 0 ? r + b : r;
}

}  // namespace

std::vector<OrientedPair> canonical_labeling(const BlownCycle& b, const Pairing& p) {
  p.check_against(b.graph());
  const int classes = b.class_count();
  std::vector<OrientedPair> out;
  out.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    OrientedPair o{p[i].x, p[i].y, 0, i};
    o.distance = mod(b.class_of(o.y) - b.class_of(o.x), classes);
    if (o.distance > b.m()) {
      std::swap(o.x, o.y);
      o.distance = classes - o.distance;
    }
    out.push_back(o);
  }
  return out;
}

PhaseOneResult phase_one(const BlownCycle& b, const std::vector<OrientedPair>& pairs) {
  PhaseOneResult result;
  result.entries.reserve(pairs.size());
  for (const OrientedPair& o : pairs) {
    TransportedPair t;
    t.pair = o;
    t.walk.reserve(o.distance + 1);
    t.walk.push_back(o.x);
    const int start = b.class_of(o.x);
    for (int step = 1; step <= o.distance; ++step) {
      t.walk.push_back(b.matching_step(start + step - 1, step, t.walk.back()));
    }
    if (t.walk.back() != o.y) t.task = ClosingTask{t.walk.back(), o.y};
    result.entries.push_back(std::move(t));
  }
  return result;
}

RoutePlan phase_two(const BlownCycle& b, const PhaseOneResult& transported) {
  const int q = b.q();
  // used[u*q + t]: edge from u to index t of the next class already closes a
  // route. Reserved-shift edges are never eligible, used or not.
  std::vector<char> used(static_cast<std::size_t>(b.order()) * q, 0);

  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < transported.entries.size(); ++i) {
    if (transported.entries[i].task) order.push_back(i);
  }
  std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
    VertexId a = transported.entries[l].task->to;
    VertexId c = transported.entries[r].task->to;
    int ca = b.class_of(a), cc = b.class_of(c);
    return ca != cc ? ca < cc : a < c;
  });

  std::vector<Route> routes(transported.entries.size());
  for (std::size_t i = 0; i < transported.entries.size(); ++i) {
    const TransportedPair& t = transported.entries[i];
    routes[i] = Route{t.pair.x, t.pair.y, t.walk};
  }

  for (std::size_t i : order) {
    const ClosingTask& task = *transported.entries[i].task;
    std::optional<VertexId> chosen;
    for (VertexId z : b.free_common_neighbors(task.from, task.to)) {
      const int t = b.index_of(z);
      if (!used[static_cast<std::size_t>(task.from) * q + t] &&
          !used[static_cast<std::size_t>(task.to) * q + t]) {
        chosen = z;
        break;
      }
    }
    if (!chosen) {
      throw RoutingDefect("no free common neighbor left for task (" +
                          std::to_string(task.from) + "," + std::to_string(task.to) +
                          ") in class " + std::to_string(b.class_of(task.to)));
    }
    const int t = b.index_of(*chosen);
    used[static_cast<std::size_t>(task.from) * q + t] = 1;
    used[static_cast<std::size_t>(task.to) * q + t] = 1;
    routes[i].path.push_back(*chosen);
    routes[i].path.push_back(task.to);
  }
  return RoutePlan::from_routes(std::move(routes));
}

RoutePlan route(const BlownCycle& b, const Pairing& p) {
  return phase_two(b, phase_one(b, canonical_labeling(b, p)));
}

}  // namespace pathpair
