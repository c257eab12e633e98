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

#ifndef PATHPAIR_SCREEN_HPP_
#define PATHPAIR_SCREEN_HPP_

#include <optional>
#include <string>
#include <vector>

#include "pathpair/graph.hpp"
#include "pathpair/metrics.hpp"

namespace pathpair {

/// s_{2k} + s_{2k+1} < k although u_{2k+1} <= n/2.
struct LayerPairViolation {
  int k = 0;
  int layer_sum = 0;
  int prefix = 0;
};

/// Fewer edges between layers t and t+1 than min(u_t, n - u_t).
struct LayerCutViolation {
  int t = 0;
  std::size_t cut = 0;
  int required = 0;
};

/// Diameter d >= 20 above 6*sqrt(2)*sqrt(n).
struct DiameterViolation {
  int diameter = 0;
  double bound = 0.0;
};

struct RootFindings {
  LayerProfile profile;
  std::vector<LayerPairViolation> layer_pair;
  std::vector<LayerCutViolation> layer_cut;
};

enum class ScreenVerdict { not_path_pairable, cannot_rule_out };

struct ScreenReport {
  int order = 0;
  int diameter = 0;
  double diameter_bound = 0.0;  // 6*sqrt(2)*sqrt(n)
  std::vector<RootFindings> roots;
  std::optional<DiameterViolation> diameter_violation;
  ScreenVerdict verdict = ScreenVerdict::cannot_rule_out;
  /// Human-readable first violated condition; empty when none.
  std::string reason;
};

/// Necessary conditions for path-pairability, checked from every vertex of
/// maximum eccentricity:
///   layer pairs: s_{2k}+s_{2k+1} >= k whenever u_{2k+1} <= n/2;
///   layer cuts: edges(S_t, S_{t+1}) >= min(u_t, n-u_t) for every t;
///   diameter: d <= 6*sqrt(2)*sqrt(n) when d >= 20.
/// Each is implied by path-pairability, so any failure rules the graph out.
/// Requires a connected graph with an even number of vertices.
ScreenReport screen(const Graph& g);

}  // namespace pathpair

#endif  // PATHPAIR_SCREEN_HPP_
