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

#ifndef PATHPAIR_BLOWN_CYCLE_HPP_
#define PATHPAIR_BLOWN_CYCLE_HPP_

#include <vector>

#include "pathpair/graph.hpp"

namespace pathpair {

/// Split of the q = 4m+3 cyclic shifts between consecutive classes.
///
/// A shift s names the perfect matching (i, a) ~ (i+1, (a+s) mod q). Shifts
/// 1..m are reserved for transporting terminals class by class; the other
/// 3m+3 shifts (0 and m+1..4m+2) are left for closing routes.
struct ShiftSystem {
  std::vector<int> reserved;
  std::vector<int> free;
};

/// The cycle C_{2m} blown up into 2m independent classes of q = 4m+3
/// vertices, consecutive classes joined completely.
///
/// Vertex (i, a) with class i in 0..2m-1 and index a in 0..q-1 has id i*q + a.
/// Requires m >= 2.
///
/// Note: the class size q = 4m+3 is a reconstruction. It is the only value
/// consistent with m perfect reserved matchings of size 4m+3 per boundary,
/// a residual degree of 3m+3 into the next class, and at least 2m+3 common
/// free neighbors for any two vertices of a class.
class BlownCycle {
 public:
  /// Throws std::invalid_argument for m < 2.
  static BlownCycle build(int m);

  int m() const { return m_; }
  int q() const { return q_; }
  int class_count() const { return 2 * m_; }
  int order() const { return 2 * m_ * q_; }
  const Graph& graph() const { return graph_; }

  int class_of(VertexId v) const { return v / q_; }
  int index_of(VertexId v) const { return v % q_; }
  /// Class and index are reduced modulo 2m and q.
  VertexId vertex(int cls, int index) const;

  ShiftSystem shift_system() const;
  bool is_reserved_shift(int shift) const { return shift >= 1 && shift <= m_; }

  /// Shift of the edge from u to z where z lies in the class after u's.
  int shift_between(VertexId u, VertexId z) const;

  /// Image of from = (boundary, a) under reserved matching shift:
  /// (boundary+1, (a+shift) mod q). Throws std::invalid_argument for a shift
  /// outside 1..m or a vertex outside that class.
  VertexId matching_step(int boundary, int shift, VertexId from) const;

  /// All z in the next class joined to both u and v by free-shift edges,
  /// sorted by index. u and v must be distinct members of one class.
  std::vector<VertexId> free_common_neighbors(VertexId u, VertexId v) const;

 private:
  int m_ = 0;
  int q_ = 0;
  Graph graph_;
};

}  // namespace pathpair

#endif  // PATHPAIR_BLOWN_CYCLE_HPP_
