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

#include "pathpair/screen.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pathpair {

ScreenReport screen(const Graph& g) {
  const int n = g.order();
  if (n == 0 || n % 2 != 0) {
    throw std::invalid_argument("screen needs a non-empty graph with an even vertex count (n = " +
                                std::to_string(n) + ")");
  }
  ScreenReport report;
  report.order = n;
  const std::vector<int> ecc = eccentricities(g);
  report.diameter = *std::max_element(ecc.begin(), ecc.end());
  report.diameter_bound = 6.0 * std::sqrt(2.0) * std::sqrt(static_cast<double>(n));

  std::vector<VertexId> roots;
  for (VertexId v = 0; v < n; ++v) {
    if (ecc[v] == report.diameter) roots.push_back(v);
  }
  report.roots.resize(roots.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::size_t i = 0; i < roots.size(); ++i) {
    RootFindings& findings = report.roots[i];
    findings.profile = bfs_layers(g, roots[i]);
    const auto& s = findings.profile.sizes;
    const auto& u = findings.profile.prefix;
    const int d = findings.profile.depth();

    for (int k = 0; 2 * k + 1 <= d; ++k) {
      if (2 * u[2 * k + 1] > n) break;
      int sum = s[2 * k] + s[2 * k + 1];
      if (sum < k) findings.layer_pair.push_back({k, sum, u[2 * k + 1]});
    }

    const std::vector<std::size_t> cuts = layer_cut_sizes(g, bfs_distances(g, roots[i]));
    for (int t = 0; t < d; ++t) {
      int required = std::min(u[t], n - u[t]);
      if (cuts[t] < static_cast<std::size_t>(required)) {
        findings.layer_cut.push_back({t, cuts[t], required});
      }
    }
  }

  for (const RootFindings& findings : report.roots) {
    const VertexId root = findings.profile.root;
    if (!findings.layer_pair.empty()) {
      const auto& v = findings.layer_pair.front();
      report.reason = "layer-pair condition fails from root " + std::to_string(root) + ": s_" +
                      std::to_string(2 * v.k) + "+s_" + std::to_string(2 * v.k + 1) + " = " +
                      std::to_string(v.layer_sum) + " < k = " + std::to_string(v.k) + " with u_" +
                      std::to_string(2 * v.k + 1) + " = " + std::to_string(v.prefix) +
                      " <= n/2";
      break;
    }
    if (!findings.layer_cut.empty()) {
      const auto& v = findings.layer_cut.front();
      report.reason = "layer-cut condition fails from root " + std::to_string(root) + ": " +
                      std::to_string(v.cut) + " edge(s) between layers " + std::to_string(v.t) +
                      " and " + std::to_string(v.t + 1) + " < " + std::to_string(v.required);
      break;
    }
  }

  if (report.diameter >= 20 && report.diameter > report.diameter_bound) {
    report.diameter_violation = DiameterViolation{report.diameter, report.diameter_bound};
    if (report.reason.empty()) {
      report.reason = "diameter " + std::to_string(report.diameter) + " exceeds 6*sqrt(2n) bound " +
                      std::to_string(report.diameter_bound);
    }
  }
  report.verdict =
      report.reason.empty() ? ScreenVerdict::cannot_rule_out : ScreenVerdict::not_path_pairable;
  return report;
}

}  // namespace pathpair
