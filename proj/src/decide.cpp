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

#include <atomic>
#include <stdexcept>
#include <string>

#include <omp.h>

#include "pathpair/pairability.hpp"

namespace pathpair {
namespace {

struct BlockResult {
  std::uint64_t examined = 0;
  std::uint64_t nodes = 0;
  bool cap_hit = false;
  std::optional<Pairing> witness;
  bool skipped = false;
};

// Recursive canonical enumeration over the vertices not yet in `current`.
bool enumerate(std::vector<char>& paired, std::vector<TerminalPair>& current, int n,
               const std::function<bool(const Pairing&)>& visit) {
  int first = 0;
  while (first < n && paired[first]) ++first;
  if (first == n) return visit(Pairing(current));
  paired[first] = 1;
  for (int partner = first + 1; partner < n; ++partner) {
    if (paired[partner]) continue;
    paired[partner] = 1;
    current.push_back({first, partner});
    bool go_on = enumerate(paired, current, n, visit);
    current.pop_back();
    paired[partner] = 0;
    if (!go_on) {
      paired[first] = 0;
      return false;
    }
  }
  paired[first] = 0;
  return true;
}

// All pairings in which vertex 0 is paired with `partner`, stopping at the
// first infeasible one.
BlockResult run_block(const Graph& g, int partner, std::uint64_t budget) {
  const int n = g.order();
  BlockResult block;
  std::vector<char> paired(n, 0);
  paired[0] = paired[partner] = 1;
  std::vector<TerminalPair> current{{0, partner}};
  enumerate(paired, current, n, [&](const Pairing& pairing) {
    SearchResult r = find_disjoint_paths(g, pairing, budget);
    ++block.examined;
    block.nodes += r.nodes;
    if (r.outcome == SearchOutcome::cap_hit) block.cap_hit = true;
    if (r.outcome == SearchOutcome::infeasible) {
      block.witness = pairing;
      return false;
    }
    return true;
  });
  return block;
}

void check_decidable(const Graph& g) {
  if (g.order() % 2 != 0) {
    throw std::invalid_argument("path-pairability needs an even vertex count (n = " +
                                std::to_string(g.order()) + ")");
  }
  if (g.order() > kMaxExhaustiveOrder) {
    throw std::invalid_argument("exhaustive decision is limited to n <= " +
                                std::to_string(kMaxExhaustiveOrder) + " (n = " +
                                std::to_string(g.order()) + ")");
  }
}

// Folds block results in canonical order, exactly as a sequential pass would.
Verdict combine(const std::vector<BlockResult>& blocks) {
  Verdict v;
  bool cap_hit = false;
  for (const BlockResult& b : blocks) {
    v.pairings_examined += b.examined;
    v.nodes_expanded += b.nodes;
    cap_hit = cap_hit || b.cap_hit;
    if (b.witness) {
      v.status = PairabilityStatus::not_path_pairable;
      v.witness = b.witness;
      return v;
    }
  }
  v.status = cap_hit ? PairabilityStatus::inconclusive : PairabilityStatus::path_pairable;
  return v;
}

}  // namespace

std::string_view status_name(PairabilityStatus s) {
  switch (s) {
    case PairabilityStatus::path_pairable:
      return "path-pairable";
    case PairabilityStatus::not_path_pairable:
      return "not-path-pairable";
    case PairabilityStatus::inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

std::uint64_t perfect_pairing_count(int n) {
  if (n < 0 || n % 2 != 0) return 0;
  std::uint64_t count = 1;
  for (int k = n - 1; k > 1; k -= 2) count *= static_cast<std::uint64_t>(k);
  return count;
}

void for_each_perfect_pairing(int n, const std::function<bool(const Pairing&)>& visit) {
  if (n < 0 || n % 2 != 0) return;
  std::vector<char> paired(n, 0);
  std::vector<TerminalPair> current;
  enumerate(paired, current, n, visit);
}

Verdict is_path_pairable_serial(const Graph& g, std::uint64_t budget) {
  check_decidable(g);
  if (g.order() == 0) return {PairabilityStatus::path_pairable, std::nullopt, 1, 0};
  std::vector<BlockResult> blocks;
  for (int partner = 1; partner < g.order(); ++partner) {
    blocks.push_back(run_block(g, partner, budget));
    if (blocks.back().witness) break;
  }
  return combine(blocks);
}

Verdict is_path_pairable(const Graph& g, const DecideOptions& options) {
  check_decidable(g);
  const int n = g.order();
  if (n == 0) return {PairabilityStatus::path_pairable, std::nullopt, 1, 0};

  std::vector<BlockResult> blocks(n - 1);
  // Lowest block that found a witness; later blocks cannot affect the result.
  std::atomic<int> first_failure{n};
  const int workers = options.workers > 0 ? options.workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
  for (int partner = 1; partner < n; ++partner) {
    if (partner > first_failure.load()) {
      blocks[partner - 1].skipped = true;
      continue;
    }
    blocks[partner - 1] = run_block(g, partner, options.budget);
    if (blocks[partner - 1].witness) {
      int seen = first_failure.load();
      while (partner < seen && !first_failure.compare_exchange_weak(seen, partner)) {
      }
    }
  }
  blocks.resize(first_failure.load() < n ? first_failure.load() : n - 1);
  return combine(blocks);
}

}  // namespace pathpair
