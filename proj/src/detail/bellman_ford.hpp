// Copyright 2026 The MCF Suite Authors
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

#ifndef MCF_DETAIL_BELLMAN_FORD_HPP
#define MCF_DETAIL_BELLMAN_FORD_HPP

#include <vector>

#include "mcf/residual.hpp"
#include "mcf/types.hpp"

namespace mcf::detail {

// One Bellman-Ford relaxation pass over the positive-residual arcs, visited
// in index order (label-correcting; updates are visible within the pass).
// Distances start at zero everywhere, which models a virtual source with
// zero-cost arcs to all nodes. Returns true if any label improved.
template <class LengthFn>
bool bellman_ford_pass(const ResidualStore& store, std::vector<Value>& dist,
                       std::vector<ArcId>& pred, LengthFn&& length) {
  bool changed = false;
  for (NodeId u = 0; u < store.node_count(); ++u) {
    const Value du = dist[u];
    for (ArcId a = store.out_begin(u); a < store.out_end(u); ++a) {
      if (store.capacity(a) <= 0) continue;
      const Value cand = du + length(a);
      const NodeId v = store.head(a);
      if (cand < dist[v]) {
        dist[v] = cand;
        pred[v] = a;
        changed = true;
      }
    }
  }
  return changed;
}

// Collects node-disjoint cycles from the predecessor graph, scanning entry
// points in node index order and marking every walked node so later walks
// that touch it stop. Each cycle's arcs are returned in traversal order.
// Predecessor cycles only form through strict relaxations, so every
// returned cycle has negative total length.
inline std::vector<std::vector<ArcId>> harvest_pred_cycles(
    const ResidualStore& store, const std::vector<ArcId>& pred) {
  const NodeId n = store.node_count();
  std::vector<char> color(n, 0);  // 0 new, 1 on current walk, 2 done
  std::vector<NodeId> walk;
  std::vector<std::vector<ArcId>> cycles;
  for (NodeId start = 0; start < n; ++start) {
    if (color[start] != 0) continue;
    walk.clear();
    NodeId u = start;
    while (u != kInvalidNode && color[u] == 0) {
      color[u] = 1;
      walk.push_back(u);
      const ArcId pa = pred[u];
      u = (pa == kInvalidArc) ? kInvalidNode : store.tail(pa);
    }
    if (u != kInvalidNode && color[u] == 1) {
      // walk = [start, ..., w_j = u, ..., w_end]; pred[w_t] is the arc
      // (w_{t+1} -> w_t), closing with (w_j -> w_end). Forward order from
      // w_j: pred[w_end], pred[w_end-1], ..., pred[w_j].
      std::size_t j = 0;
      while (walk[j] != u) ++j;
      std::vector<ArcId> cycle;
      for (std::size_t t = walk.size(); t-- > j;) cycle.push_back(pred[walk[t]]);
      cycles.push_back(std::move(cycle));
    }
    for (NodeId w : walk) color[w] = 2;
  }
  return cycles;
}

}  // namespace mcf::detail

#endif  // MCF_DETAIL_BELLMAN_FORD_HPP
