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

#include "pathpair/pairing.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace pathpair {
namespace {

std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    std::uint64_t x = rng();
    if (x >= threshold) return x % bound;
  }
}

}  // namespace

Pairing::Pairing(std::vector<TerminalPair> pairs) : pairs_(std::move(pairs)) {
  std::vector<VertexId> endpoints;
  endpoints.reserve(2 * pairs_.size());
  for (const TerminalPair& p : pairs_) {
    if (p.x == p.y) {
      throw std::invalid_argument("pair (" + std::to_string(p.x) + "," + std::to_string(p.y) +
                                  ") joins a vertex to itself");
    }
    endpoints.push_back(p.x);
    endpoints.push_back(p.y);
  }
  std::sort(endpoints.begin(), endpoints.end());
  auto dup = std::adjacent_find(endpoints.begin(), endpoints.end());
  if (dup != endpoints.end()) {
    throw std::invalid_argument("vertex " + std::to_string(*dup) +
                                " is an endpoint of more than one pair");
  }
  std::sort(pairs_.begin(), pairs_.end(),
            [](const TerminalPair& a, const TerminalPair& b) { return a.low() < b.low(); });
}

void Pairing::check_against(const Graph& g) const {
  for (const TerminalPair& p : pairs_) {
    for (VertexId v : {p.x, p.y}) {
      if (!g.contains(v)) {
        throw std::invalid_argument("pairing endpoint " + std::to_string(v) +
                                    " is not a vertex of the graph");
      }
    }
  }
}

Pairing random_perfect_pairing(int n, std::uint64_t seed) {
  if (n < 0 || n % 2 != 0) {
    throw std::invalid_argument("a perfect pairing needs an even vertex count");
  }
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  for (int i = n - 1; i > 0; --i) {
    auto j = static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(i) + 1));
    std::swap(order[i], order[j]);
  }
  std::vector<TerminalPair> pairs;
  pairs.reserve(n / 2);
  for (int k = 0; k < n; k += 2) pairs.push_back({order[k], order[k + 1]});
  return Pairing(std::move(pairs));
}

}  // namespace pathpair
