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

#ifndef PATHPAIR_PAIRING_HPP_
#define PATHPAIR_PAIRING_HPP_

#include <cstdint>
#include <vector>

#include "pathpair/graph.hpp"

namespace pathpair {

/// A demanded connection between two distinct terminals.
struct TerminalPair {
  VertexId x = 0;
  VertexId y = 0;

  VertexId low() const { return x < y ? x : y; }
  friend bool operator==(const TerminalPair&, const TerminalPair&) = default;
};

/// A set of pairs with pairwise-disjoint endpoints, perfect or partial.
///
/// Pairs are kept sorted by their smaller endpoint; the orientation of each
/// pair (which endpoint is x) is preserved as given.
class Pairing {
 public:
  Pairing() = default;
  /// Throws std::invalid_argument if a pair has equal endpoints or an
  /// endpoint appears twice.
  explicit Pairing(std::vector<TerminalPair> pairs);

  const std::vector<TerminalPair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  const TerminalPair& operator[](std::size_t i) const { return pairs_[i]; }

  /// Throws std::invalid_argument if an endpoint is not a vertex of g.
  void check_against(const Graph& g) const;
  bool is_perfect_for(int n) const { return 2 * static_cast<int>(pairs_.size()) == n; }

  friend bool operator==(const Pairing&, const Pairing&) = default;

 private:
  std::vector<TerminalPair> pairs_;
};

/// Uniform random perfect pairing of 0..n-1 (n even).
///
/// Portable across platforms and standard libraries: the identity
/// permutation is Fisher-Yates shuffled (i from n-1 down to 1, j drawn
/// uniformly from 0..i) with draws from std::mt19937_64 seeded with `seed`;
/// a draw below `bound` rejects raw outputs under 2^64 mod bound and
/// returns the remainder. Consecutive entries (2k, 2k+1) form pair k.
Pairing random_perfect_pairing(int n, std::uint64_t seed);

}  // namespace pathpair

#endif  // PATHPAIR_PAIRING_HPP_
