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

#ifndef PATHPAIR_VERIFIER_HPP_
#define PATHPAIR_VERIFIER_HPP_

#include <optional>
#include <string_view>
#include <vector>

#include "pathpair/graph.hpp"
#include "pathpair/pairing.hpp"
#include "pathpair/route_plan.hpp"

namespace pathpair {

enum class ViolationKind {
  not_a_walk,
  wrong_endpoints,
  edge_reused,
  endpoint_not_in_pairing,
};

std::string_view violation_name(ViolationKind kind);

struct Violation {
  ViolationKind kind = ViolationKind::not_a_walk;
  std::vector<std::size_t> pairs;  // indexes into the pairing
  std::optional<Edge> edge;
  std::optional<VertexId> vertex;
};

/// A route that visits some vertex more than once. Allowed, only reported.
struct RepeatWarning {
  std::size_t pair = 0;
  VertexId vertex = 0;
};

struct VerificationReport {
  bool ok = true;
  std::vector<Violation> violations;
  std::vector<RepeatWarning> warnings;
};

/// Certifies plan against the raw graph: each route is a walk in g between
/// the terminals of its pair, and no edge is used twice overall. Works from
/// the routes' vertex sequences only; plan.used_edges is not trusted.
VerificationReport verify_plan(const Graph& g, const Pairing& p, const RoutePlan& plan);

}  // namespace pathpair

#endif  // PATHPAIR_VERIFIER_HPP_
