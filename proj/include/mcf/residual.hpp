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

#ifndef MCF_RESIDUAL_HPP
#define MCF_RESIDUAL_HPP

#include <vector>

#include "mcf/arc_list_graph.hpp"
#include "mcf/flow_state.hpp"
#include "mcf/network.hpp"
#include "mcf/types.hpp"

namespace mcf {

// Paired forward/backward residual arc store.
//
// Every original arc contributes one forward arc (capacity u - x, cost +c)
// and one backward arc (capacity x, cost -c), linked through sister indices.
// The outgoing arcs of each node occupy a contiguous index range, so scans
// never touch adjacency lists. Arcs whose residual capacity is zero are kept
// in place and skipped by callers; the store is never restructured.
class ResidualStore {
 public:
  ResidualStore(const Network& network, const std::vector<Value>& flow);

  NodeId node_count() const { return static_cast<NodeId>(first_out_.size()) - 1; }
  ArcId arc_count() const { return static_cast<ArcId>(head_.size()); }

  NodeId head(ArcId a) const { return head_[a]; }
  NodeId tail(ArcId a) const { return head_[sister_[a]]; }
  ArcId sister(ArcId a) const { return sister_[a]; }
  Value capacity(ArcId a) const { return capacity_[a]; }
  Value cost(ArcId a) const { return cost_[a]; }
  ArcId original_arc(ArcId a) const { return original_[a]; }
  bool is_forward(ArcId a) const { return forward_[a] != 0; }

  ArcId out_begin(NodeId v) const { return first_out_[v]; }
  ArcId out_end(NodeId v) const { return first_out_[v + 1]; }

  ArcId forward_index(ArcId original) const { return forward_index_[original]; }
  ArcId backward_index(ArcId original) const {
    return sister_[forward_index_[original]];
  }

  // Moves delta units along a residual arc; the sister arc gains the
  // capacity. delta may be negative (undo) but must keep both sides
  // nonnegative.
  void push(ArcId a, Value delta) {
    capacity_[a] -= delta;
    capacity_[sister_[a]] += delta;
  }

  // Flow on each original arc implied by the current residual capacities.
  std::vector<Value> extract_flow() const;

  // Direct capacity override used by solvers that saturate arcs wholesale.
  void set_capacity(ArcId a, Value value) { capacity_[a] = value; }

 private:
  std::vector<ArcId> first_out_;  // size n+1
  std::vector<NodeId> head_;
  std::vector<ArcId> sister_;
  std::vector<Value> capacity_;
  std::vector<Value> cost_;
  std::vector<ArcId> original_;
  std::vector<char> forward_;
  std::vector<ArcId> forward_index_;  // per original arc
};

// Builds the residual view of a flow; the flow must satisfy the capacity
// bounds.
ResidualStore residual_view(const Network& network, const FlowState& state);

// Projects the positive-residual arcs to a bare arc-list graph. When
// arc_map is non-null it receives, per projected arc, the residual arc
// index it came from.
ArcListGraph positive_residual_graph(const ResidualStore& store,
                                     std::vector<ArcId>* arc_map = nullptr);

}  // namespace mcf

#endif  // MCF_RESIDUAL_HPP
