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

#include "pathpair/generators.hpp"

#include <array>
#include <stdexcept>

namespace pathpair {
namespace {

constexpr std::array<std::pair<Family, std::string_view>, 8> kNames{{
    {Family::cycle, "cycle"},
    {Family::path, "path"},
    {Family::complete, "complete"},
    {Family::complete_bipartite, "complete-bipartite"},
    {Family::hypercube, "hypercube"},
    {Family::petersen, "petersen"},
    {Family::grid2, "grid2"},
    {Family::grid3, "grid3"},
}};

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

int param(const FamilySpec& spec, std::size_t count, std::size_t i) {
  require(spec.params.size() == count,
          std::string(family_name(spec.family)) + " expects " + std::to_string(count) +
              " parameter(s), got " + std::to_string(spec.params.size()));
  return spec.params[i];
}

// Cartesian product of complete graphs with the given side lengths,
// row-major numbering.
Graph complete_grid(const std::vector<int>& sides) {
  int n = 1;
  for (int s : sides) {
    require(s >= 1, "grid side lengths must be positive");
    n *= s;
  }
  std::vector<Edge> edges;
  std::vector<std::string> labels(n);
  std::vector<int> coord(sides.size());
  for (int v = 0; v < n; ++v) {
    int rest = v;
    for (std::size_t k = sides.size(); k-- > 0;) {
      coord[k] = rest % sides[k];
      rest /= sides[k];
    }
    std::string label = "(";
    for (std::size_t k = 0; k < sides.size(); ++k) {
      if (k) label += ",";
      label += std::to_string(coord[k]);
    }
    labels[v] = label + ")";

    // Neighbors differ in exactly one coordinate.
    int stride = 1;
    for (std::size_t k = sides.size(); k-- > 0;) {
      for (int value = coord[k] + 1; value < sides[k]; ++value) {
        edges.emplace_back(v, v + (value - coord[k]) * stride);
      }
      stride *= sides[k];
    }
  }
  return Graph::from_edges(n, edges, std::move(labels));
}

}  // namespace

std::string_view family_name(Family f) {
  for (const auto& [family, name] : kNames) {
    if (family == f) return name;
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (const auto& [family, known] : kNames) {
    if (known == name) return family;
  }
  throw std::invalid_argument("unknown graph family '" + std::string(name) + "'");
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph path_graph(int n) {
  require(n >= 1, "path needs at least 1 vertex");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

Graph complete_graph(int n) {
  require(n >= 1, "complete graph needs at least 1 vertex");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph complete_bipartite_graph(int a, int b) {
  require(a >= 1 && b >= 1, "complete bipartite graph needs both parts non-empty");
  std::vector<Edge> edges;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  return Graph::from_edges(a + b, edges);
}

Graph hypercube_graph(int dim) {
  require(dim >= 1, "hypercube dimension must be at least 1");
  require(dim <= 24, "hypercube dimension too large");
  const int n = 1 << dim;
  std::vector<Edge> edges;
  std::vector<std::string> labels(n);
  for (int v = 0; v < n; ++v) {
    for (int bit = 0; bit < dim; ++bit) {
      if (!(v & (1 << bit))) edges.emplace_back(v, v | (1 << bit));
    }
    std::string label(dim, '0');
    for (int bit = 0; bit < dim; ++bit) {
      if (v & (1 << bit)) label[dim - 1 - bit] = '1';
    }
    labels[v] = std::move(label);
  }
  return Graph::from_edges(n, edges, std::move(labels));
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i + 5, (i + 2) % 5 + 5);
    edges.emplace_back(i, i + 5);
  }
  return Graph::from_edges(10, edges);
}

Graph grid2_graph(int a, int b) { return complete_grid({a, b}); }

Graph grid3_graph(int a, int b, int c) { return complete_grid({a, b, c}); }

Graph generate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::cycle:
      return cycle_graph(param(spec, 1, 0));
    case Family::path:
      return path_graph(param(spec, 1, 0));
    case Family::complete:
      return complete_graph(param(spec, 1, 0));
    case Family::complete_bipartite:
      return complete_bipartite_graph(param(spec, 2, 0), param(spec, 2, 1));
    case Family::hypercube:
      return hypercube_graph(param(spec, 1, 0));
    case Family::petersen:
      require(spec.params.empty(), "petersen takes no parameters");
      return petersen_graph();
    case Family::grid2:
      return grid2_graph(param(spec, 2, 0), param(spec, 2, 1));
    case Family::grid3:
      return grid3_graph(param(spec, 3, 0), param(spec, 3, 1), param(spec, 3, 2));
  }
  throw std::invalid_argument("unknown graph family");
}

}  // namespace pathpair
