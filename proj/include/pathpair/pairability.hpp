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

#ifndef PATHPAIR_PAIRABILITY_HPP_
#define PATHPAIR_PAIRABILITY_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "pathpair/graph.hpp"
#include "pathpair/pairing.hpp"
#include "pathpair/route_plan.hpp"

namespace pathpair {

inline constexpr std::uint64_t kDefaultSearchBudget = 100'000'000;
/// Largest order for which every perfect pairing is enumerated.
inline constexpr int kMaxExhaustiveOrder = 12;

enum class SearchOutcome { feasible, infeasible, cap_hit };

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::infeasible;
  std::optional<RoutePlan> plan;  // present iff feasible
  std::uint64_t nodes = 0;
};

/// Exact edge-disjoint paths search by backtracking over simple paths in the
/// residual graph.
///
/// The unrouted pair with the largest residual distance is routed next. A
/// branch is cut when some unrouted pair is disconnected in the residual
/// graph, or when the edges used so far plus the residual distances of the
/// unrouted pairs exceed |E|. Each path extension counts as one node; beyond
/// `budget` nodes the search stops with cap_hit.
SearchResult find_disjoint_paths(const Graph& g, const Pairing& p,
                                 std::uint64_t budget = kDefaultSearchBudget);

enum class PairabilityStatus { path_pairable, not_path_pairable, inconclusive };

std::string_view status_name(PairabilityStatus s);

struct Verdict {
  PairabilityStatus status = PairabilityStatus::inconclusive;
  std::optional<Pairing> witness;  // first infeasible pairing in canonical order
  std::uint64_t pairings_examined = 0;
  std::uint64_t nodes_expanded = 0;
};

struct DecideOptions {
  std::uint64_t budget = kDefaultSearchBudget;  // per pairing
  int workers = 0;                              // 0: OpenMP default
};

/// (n-1)!! perfect pairings of n vertices; 0 for odd n.
std::uint64_t perfect_pairing_count(int n);

/// Calls visit on every perfect pairing of 0..n-1 in canonical order: the
/// smallest unpaired vertex is matched to each remaining candidate in
/// ascending order, recursively. Stops early when visit returns false.
void for_each_perfect_pairing(int n, const std::function<bool(const Pairing&)>& visit);

/// Exhaustive decision over all perfect pairings (n even, n <= 12).
///
/// Work is split by the partner of vertex 0 and spread over OpenMP threads.
/// The witness is always the lowest infeasible pairing in canonical order and
/// the statistics count exactly the pairings a sequential run would visit,
/// so the result does not depend on the number of workers.
Verdict is_path_pairable(const Graph& g, const DecideOptions& options = {});

/// Sequential reference for is_path_pairable.
Verdict is_path_pairable_serial(const Graph& g, std::uint64_t budget = kDefaultSearchBudget);

}  // namespace pathpair

#endif  // PATHPAIR_PAIRABILITY_HPP_
