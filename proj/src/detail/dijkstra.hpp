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

#ifndef MCF_DETAIL_DIJKSTRA_HPP
#define MCF_DETAIL_DIJKSTRA_HPP

#include <cassert>
#include <limits>
#include <vector>

#include "detail/indexed_heap.hpp"
#include "mcf/residual.hpp"
#include "mcf/types.hpp"

namespace mcf::detail {

// Early-terminating Dijkstra over reduced costs, reused across iterations.
// Only arcs with residual capacity >= delta are relaxed, and the search
// stops once a node with excess <= -delta is permanently labeled. Node
// state is version-stamped so resets are O(touched).
class DijkstraWorkspace {
 public:
  explicit DijkstraWorkspace(NodeId node_count)
      : heap_(node_count),
        dist_(node_count, 0),
        pred_(node_count, kInvalidArc),
        label_stamp_(node_count, 0),
        perm_stamp_(node_count, 0) {}

  // Returns the terminating deficit node, or kInvalidNode if none is
  // reachable in the delta-residual network.
  NodeId search(const ResidualStore& store,
                const std::vector<Value>& potential,
                const std::vector<Value>& excess, NodeId source, Value delta) {
    ++run_;
    heap_.clear();
    permanent_.clear();
    dist_[source] = 0;
    pred_[source] = kInvalidArc;
    label_stamp_[source] = run_;
    heap_.push_or_decrease(source, 0);

    while (!heap_.empty()) {
      const auto [d, u] = heap_.pop();
      perm_stamp_[u] = run_;
      permanent_.push_back(u);
      if (excess[u] <= -delta) return u;
      for (ArcId a = store.out_begin(u); a < store.out_end(u); ++a) {
        if (store.capacity(a) < delta) continue;
        const NodeId v = store.head(a);
        if (perm_stamp_[v] == run_) continue;
        const Value rc = store.cost(a) + potential[u] - potential[v];
        assert(rc >= 0);
        const Value cand = d + rc;
        if (label_stamp_[v] != run_ || cand < dist_[v]) {
          dist_[v] = cand;
          pred_[v] = a;
          label_stamp_[v] = run_;
          heap_.push_or_decrease(v, cand);
        }
      }
    }
    return kInvalidNode;
  }

  Value dist(NodeId v) const { return dist_[v]; }
  ArcId pred_arc(NodeId v) const { return pred_[v]; }
  bool permanent(NodeId v) const { return perm_stamp_[v] == run_; }
  const std::vector<NodeId>& permanent_nodes() const { return permanent_; }

 private:
  IndexedHeap heap_;
  std::vector<Value> dist_;
  std::vector<ArcId> pred_;
  std::vector<std::uint32_t> label_stamp_;
  std::vector<std::uint32_t> perm_stamp_;
  std::vector<NodeId> permanent_;
  std::uint32_t run_ = 0;
};

}  // namespace mcf::detail

#endif  // MCF_DETAIL_DIJKSTRA_HPP
