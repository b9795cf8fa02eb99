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

#ifndef MCF_DETAIL_MAX_FLOW_HPP
#define MCF_DETAIL_MAX_FLOW_HPP

#include <limits>
#include <vector>

#include "mcf/types.hpp"

namespace mcf::detail {

// Dinic's algorithm on an ad-hoc graph; used to establish initial feasible
// flows (super-source / super-sink construction) and for feasibility
// pre-checks. Deterministic: adjacency follows arc insertion order.
class MaxFlowGraph {
 public:
  explicit MaxFlowGraph(NodeId node_count)
      : first_(node_count, kInvalidArc),
        level_(node_count),
        iter_(node_count) {}

  // Returns the index of the forward arc.
  ArcId add_arc(NodeId u, NodeId v, Value cap) {
    const ArcId id = static_cast<ArcId>(head_.size());
    head_.push_back(v);
    cap_.push_back(cap);
    next_.push_back(first_[u]);
    first_[u] = id;
    head_.push_back(u);
    cap_.push_back(0);
    next_.push_back(first_[v]);
    first_[v] = id + 1;
    return id;
  }

  Value flow_on(ArcId forward_arc) const { return cap_[forward_arc ^ 1]; }

  Value max_flow(NodeId source, NodeId sink) {
    Value total = 0;
    while (build_levels(source, sink)) {
      iter_ = first_;
      Value aug;
      while ((aug = blocking_path(source, sink,
                                  std::numeric_limits<Value>::max())) > 0) {
        total += aug;
      }
    }
    return total;
  }

 private:
  bool build_levels(NodeId source, NodeId sink) {
    std::fill(level_.begin(), level_.end(), -1);
    queue_.clear();
    queue_.push_back(source);
    level_[source] = 0;
    for (std::size_t i = 0; i < queue_.size(); ++i) {
      const NodeId u = queue_[i];
      for (ArcId a = first_[u]; a != kInvalidArc; a = next_[a]) {
        if (cap_[a] > 0 && level_[head_[a]] < 0) {
          level_[head_[a]] = level_[u] + 1;
          queue_.push_back(head_[a]);
        }
      }
    }
    return level_[sink] >= 0;
  }

  Value blocking_path(NodeId u, NodeId sink, Value limit) {
    if (u == sink) return limit;
    for (ArcId& a = iter_[u]; a != kInvalidArc; a = next_[a]) {
      const NodeId v = head_[a];
      if (cap_[a] <= 0 || level_[v] != level_[u] + 1) continue;
      const Value pushed =
          blocking_path(v, sink, std::min(limit, cap_[a]));
      if (pushed > 0) {
        cap_[a] -= pushed;
        cap_[a ^ 1] += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<ArcId> first_;
  std::vector<NodeId> head_;
  std::vector<Value> cap_;
  std::vector<ArcId> next_;
  std::vector<int> level_;
  std::vector<ArcId> iter_;
  std::vector<NodeId> queue_;
};

}  // namespace mcf::detail

#endif  // MCF_DETAIL_MAX_FLOW_HPP
