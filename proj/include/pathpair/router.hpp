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

#ifndef PATHPAIR_ROUTER_HPP_
#define PATHPAIR_ROUTER_HPP_

#include <optional>
#include <stdexcept>
#include <vector>

#include "pathpair/blown_cycle.hpp"
#include "pathpair/pairing.hpp"
#include "pathpair/route_plan.hpp"

namespace pathpair {

/// A pair oriented so that y lies `distance` classes ahead of x along the
/// cycle direction, with distance in 0..m.
struct OrientedPair {
  VertexId x = 0;
  VertexId y = 0;
  int distance = 0;
  std::size_t pair_index = 0;
};

/// Two vertices of one class still to be joined through the next class.
struct ClosingTask {
  VertexId from = 0;  // end of the transport walk (or x when distance is 0)
  VertexId to = 0;    // the terminal y
};

struct TransportedPair {
  OrientedPair pair;
  /// x, p_1(x), ..., p_d(x); just {x} when distance is 0.
  std::vector<VertexId> walk;
  /// Empty when the walk already ends at y.
  std::optional<ClosingTask> task;
};

struct PhaseOneResult {
  std::vector<TransportedPair> entries;  // in pairing order
};

/// Thrown when the closing phase finds no usable common neighbor. The
/// construction guarantees one always exists, so this signals a defect.
class RoutingDefect : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Orients every pair so the class distance from x to y is at most m. Pairs
/// at distance 0 or exactly m keep their input orientation.
std::vector<OrientedPair> canonical_labeling(const BlownCycle& b, const Pairing& p);

/// Transports x into y's class: step j (1-based) follows reserved shift j
/// across boundary class(x)+j-1.
PhaseOneResult phase_one(const BlownCycle& b, const std::vector<OrientedPair>& pairs);

/// Closes each remaining task (u, v) in class i via some z in class i+1 with
/// both edges on free shifts and not yet used. Tasks go by class ascending,
/// then by terminal id ascending; each takes the smallest-index z.
RoutePlan phase_two(const BlownCycle& b, const PhaseOneResult& transported);

/// Edge-disjoint routes for any pairing of the construction's vertices.
RoutePlan route(const BlownCycle& b, const Pairing& p);

}  // namespace pathpair

#endif  // PATHPAIR_ROUTER_HPP_
