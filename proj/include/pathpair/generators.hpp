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

#ifndef PATHPAIR_GENERATORS_HPP_
#define PATHPAIR_GENERATORS_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "pathpair/graph.hpp"

namespace pathpair {

enum class Family {
  cycle,
  path,
  complete,
  complete_bipartite,
  hypercube,
  petersen,
  grid2,
  grid3,
};

/// A named graph family with its integer parameters.
///
/// Parameter meaning per family: cycle/path/complete use params[0] = n;
/// complete_bipartite uses (a, b); hypercube uses the dimension; grid2 and
/// grid3 use the side lengths of the complete-graph factors; petersen takes
/// none.
struct FamilySpec {
  Family family = Family::cycle;
  std::vector<int> params;
};

std::string_view family_name(Family f);
/// Inverse of family_name; throws std::invalid_argument on unknown names.
Family parse_family(std::string_view name);

/// Canonical numberings:
///   cycle / path: 0..n-1 in order along the cycle or path.
///   complete_bipartite(a, b): part A = 0..a-1, part B = a..a+b-1.
///   hypercube(d): the id's d bits are the coordinates; label is the bit
///     string, most significant coordinate first.
///   petersen: outer 5-cycle 0..4, inner pentagram 5..9 (i+5 ~ (i+2)%5+5),
///     spokes i ~ i+5.
///   grid2(a, b): row-major, vertex (r, c) = r*b + c; K_a x K_b.
///   grid3(a, b, c): row-major, (x, y, z) = (x*b + y)*c + z.
Graph generate(const FamilySpec& spec);

Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int a, int b);
Graph hypercube_graph(int dim);
Graph petersen_graph();
Graph grid2_graph(int a, int b);
Graph grid3_graph(int a, int b, int c);

}  // namespace pathpair

#endif  // PATHPAIR_GENERATORS_HPP_
