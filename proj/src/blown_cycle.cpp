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

#include "pathpair/blown_cycle.hpp"

#include <stdexcept>
#include <string>

namespace pathpair {
namespace {

int mod(int a, int b) {
  int r = a % b;
  return r < 0 ? r + b : r;
}

}  // namespace

BlownCycle BlownCycle::build(int m) {
  if (m < 2) {
    throw std::invalid_argument("blown cycle needs m >= 2 (got " + std::to_string(m) + ")");
  }
  BlownCycle b;
  b.m_ = m;
  b.q_ = 4 * m + 3;
  const int classes = 2 * m;
  const int q = b.q_;
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(classes) * q * q);
  std::vector<std::string> labels(classes * q);
  for (int i = 0; i < classes; ++i) {
    int next = (i + 1) % classes;
    for (int a = 0; a < q; ++a) {
      labels[i * q + a] = "(" + std::to_string(i) + "," + std::to_string(a) + ")";
      for (int t = 0; t < q; ++t) edges.emplace_back(i * q + a, next * q + t);
    }
  }
  b.graph_ = Graph::from_edges(classes * q, edges, std::move(labels));
  return b;
}

VertexId BlownCycle::vertex(int cls, int index) const {
  return mod(cls, class_count()) * q_ + mod(index, q_);
}

ShiftSystem BlownCycle::shift_system() const {
  ShiftSystem s;
  for (int shift = 0; shift < q_; ++shift) {
    (is_reserved_shift(shift) ? s.reserved : s.free).push_back(shift);
  }
  return s;
}

int BlownCycle::shift_between(VertexId u, VertexId z) const {
  if (mod(class_of(z) - class_of(u), class_count()) != 1) {
    throw std::invalid_argument("vertex " + std::to_string(z) +
                                " is not in the class after vertex " + std::to_string(u));
  }
  return mod(index_of(z) - index_of(u), q_);
}

VertexId BlownCycle::matching_step(int boundary, int shift, VertexId from) const {
  if (!is_reserved_shift(shift)) {
    throw std::invalid_argument("shift " + std::to_string(shift) +
                                " is not a reserved shift (1.." + std::to_string(m_) + ")");
  }
  if (!graph_.contains(from) || class_of(from) != mod(boundary, class_count())) {
    throw std::invalid_argument("vertex " + std::to_string(from) + " is not in class " +
                                std::to_string(boundary));
  }
  return vertex(boundary + 1, index_of(from) + shift);
}

std::vector<VertexId> BlownCycle::free_common_neighbors(VertexId u, VertexId v) const {
  if (!graph_.contains(u) || !graph_.contains(v)) {
    throw std::invalid_argument("vertex out of range");
  }
  if (class_of(u) != class_of(v)) {
    throw std::invalid_argument("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                                " are in different classes");
  }
  if (u == v) throw std::invalid_argument("free_common_neighbors needs distinct vertices");
  std::vector<VertexId> out;
  const int next = class_of(u) + 1;
  for (int t = 0; t < q_; ++t) {
    if (!is_reserved_shift(mod(t - index_of(u), q_)) &&
        !is_reserved_shift(mod(t - index_of(v), q_))) {
      out.push_back(vertex(next, t));
    }
  }
  return out;
}

}  // namespace pathpair
