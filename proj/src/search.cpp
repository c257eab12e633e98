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

#include <algorithm>
#include <numeric>

#include "pathpair/pairability.hpp"

namespace pathpair {
namespace {

struct BudgetExhausted {};

class DisjointPathSearch {
 public:
  DisjointPathSearch(const Graph& g, const Pairing& p, std::uint64_t budget)
      : g_(g),
        pairs_(p.pairs()),
        budget_(budget),
        edge_used_(g.size(), 0),
        on_path_(g.order(), 0),
        routed_(pairs_.size(), 0),
        routes_(pairs_.size()),
        dist_(g.order()) {
    queue_.reserve(g.order());
  }

  bool run() { return solve(); }
  std::uint64_t nodes() const { return nodes_; }

  RoutePlan plan() const {
    std::vector<Route> routes;
    routes.reserve(pairs_.size());
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      routes.push_back({pairs_[i].x, pairs_[i].y, routes_[i]});
    }
    return RoutePlan::from_routes(std::move(routes));
  }

 private:
  // BFS from src over unused edges into out; with stop >= 0, returns as soon
  // as stop is labelled.
  void residual_bfs(VertexId src, std::vector<int>& out, VertexId stop = -1) {
    std::fill(out.begin(), out.end(), -1);
    queue_.clear();
    out[src] = 0;
    queue_.push_back(src);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      VertexId u = queue_[head];
      auto nbrs = g_.neighbors(u);
      auto ids = g_.incident_edges(u);
      for (std::size_t k = 0; k < nbrs.size(); ++k) {
        VertexId w = nbrs[k];
        if (edge_used_[ids[k]] || out[w] >= 0) continue;
        out[w] = out[u] + 1;
        if (w == stop) return;
        queue_.push_back(w);
      }
    }
  }

  bool solve() {
    int total = 0;
    int chosen = -1;
    int chosen_dist = -1;
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      if (routed_[i]) continue;
      residual_bfs(pairs_[i].x, dist_, pairs_[i].y);
      int d = dist_[pairs_[i].y];
      if (d < 0) return false;
      total += d;
      if (d > chosen_dist) {
        chosen = static_cast<int>(i);
        chosen_dist = d;
      }
    }
    if (chosen < 0) return true;
    if (used_count_ + total > static_cast<int>(g_.size())) return false;

    Frame frame;
    frame.pair = static_cast<std::size_t>(chosen);
    frame.others = total - chosen_dist;
    frame.to_target.resize(g_.order());
    residual_bfs(pairs_[chosen].y, frame.to_target);

    VertexId start = pairs_[chosen].x;
    on_path_[start] = 1;
    path_.push_back(start);
    bool found = extend(frame, start);
    path_.pop_back();
    on_path_[start] = 0;
    return found;
  }

  struct Frame {
    std::size_t pair = 0;
    int others = 0;                // residual distance sum of the other pairs
    std::vector<int> to_target;    // residual distances to the pair's target
  };

  bool extend(const Frame& frame, VertexId cur) {
    if (++nodes_ > budget_) throw BudgetExhausted{};
    if (cur == pairs_[frame.pair].y) {
      // Later pairs may revisit this route's vertices; only edges are exclusive.
      std::vector<VertexId> finished;
      finished.swap(path_);
      for (VertexId v : finished) on_path_[v] = 0;
      routed_[frame.pair] = 1;
      routes_[frame.pair] = finished;
      bool found = solve();
      routed_[frame.pair] = 0;
      for (VertexId v : finished) on_path_[v] = 1;
      path_.swap(finished);
      return found;
    }
    const int limit = static_cast<int>(g_.size());
    auto nbrs = g_.neighbors(cur);
    auto ids = g_.incident_edges(cur);
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      VertexId w = nbrs[k];
      EdgeId e = ids[k];
      if (edge_used_[e] || on_path_[w]) continue;
      int remaining = frame.to_target[w];
      if (remaining < 0 || used_count_ + 1 + remaining + frame.others > limit) continue;
      edge_used_[e] = 1;
      ++used_count_;
      on_path_[w] = 1;
      path_.push_back(w);
      bool found = extend(frame, w);
      path_.pop_back();
      on_path_[w] = 0;
      --used_count_;
      edge_used_[e] = 0;
      if (found) return true;
    }
    return false;
  }

  const Graph& g_;
  const std::vector<TerminalPair>& pairs_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<char> edge_used_;
  int used_count_ = 0;
  std::vector<char> on_path_;
  std::vector<char> routed_;
  std::vector<std::vector<VertexId>> routes_;
  std::vector<VertexId> path_;
  std::vector<int> dist_;
  std::vector<VertexId> queue_;
};

}  // namespace

SearchResult find_disjoint_paths(const Graph& g, const Pairing& p, std::uint64_t budget) {
  p.check_against(g);
  DisjointPathSearch search(g, p, budget);
  SearchResult result;
  try {
    if (search.run()) {
      result.outcome = SearchOutcome::feasible;
      result.plan = search.plan();
    } else {
      result.outcome = SearchOutcome::infeasible;
    }
  } catch (const BudgetExhausted&) {
    result.outcome = SearchOutcome::cap_hit;
  }
  result.nodes = search.nodes();
  return result;
}

}  // namespace pathpair
