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

#include "mcf/residual.hpp"

#include <stdexcept>

namespace mcf {

ResidualStore::ResidualStore(const Network& network,
                             const std::vector<Value>& flow) {
  const NodeId n = network.node_count();
  const ArcId m = network.arc_count();
  if (flow.size() != static_cast<std::size_t>(m)) {
    throw std::invalid_argument("flow length does not match arc count");
  }
  for (ArcId a = 0; a < m; ++a) {
    if (flow[a] < 0 || flow[a] > network.capacity(a)) {
      throw std::invalid_argument("flow violates capacity bounds");
    }
  }

  // Counting sort by tail node. Within a node, forward arcs precede
  // backward arcs, each in original arc order; the ordering is part of the
  // deterministic iteration contract.
  first_out_.assign(n + 1, 0);
  for (ArcId a = 0; a < m; ++a) {
    ++first_out_[network.arc_source(a) + 1];
    ++first_out_[network.arc_target(a) + 1];
  }
  for (NodeId v = 0; v < n; ++v) first_out_[v + 1] += first_out_[v];

  const ArcId total = 2 * m;
  head_.resize(total);
  sister_.resize(total);
  capacity_.resize(total);
  cost_.resize(total);
  original_.resize(total);
  forward_.resize(total);
  forward_index_.resize(m);

  std::vector<ArcId> cursor(first_out_.begin(), first_out_.end() - 1);
  std::vector<ArcId> backward_slot(m);
  for (ArcId a = 0; a < m; ++a) {
    const ArcId f = cursor[network.arc_source(a)]++;
    forward_index_[a] = f;
    head_[f] = network.arc_target(a);
    capacity_[f] = network.capacity(a) - flow[a];
    cost_[f] = network.cost(a);
    original_[f] = a;
    forward_[f] = 1;
  }
  for (ArcId a = 0; a < m; ++a) {
    const ArcId b = cursor[network.arc_target(a)]++;
    backward_slot[a] = b;
    head_[b] = network.arc_source(a);
    capacity_[b] = flow[a];
    cost_[b] = -network.cost(a);
    original_[b] = a;
    forward_[b] = 0;
  }
  for (ArcId a = 0; a < m; ++a) {
    sister_[forward_index_[a]] = backward_slot[a];
    sister_[backward_slot[a]] = forward_index_[a];
  }
}

std::vector<Value> ResidualStore::extract_flow() const {
  std::vector<Value> flow(forward_index_.size());
  for (ArcId a = 0; a < static_cast<ArcId>(forward_index_.size()); ++a) {
    flow[a] = capacity_[sister_[forward_index_[a]]];
  }
  return flow;
}

ResidualStore residual_view(const Network& network, const FlowState& state) {
  return ResidualStore(network, state.flow);
}

ArcListGraph positive_residual_graph(const ResidualStore& store,
                                     std::vector<ArcId>* arc_map) {
  ArcListGraph graph;
  graph.node_count = store.node_count();
  if (arc_map) arc_map->clear();
  for (NodeId v = 0; v < store.node_count(); ++v) {
    for (ArcId a = store.out_begin(v); a < store.out_end(v); ++a) {
      if (store.capacity(a) <= 0) continue;
      graph.source.push_back(v);
      graph.target.push_back(store.head(a));
      graph.cost.push_back(store.cost(a));
      if (arc_map) arc_map->push_back(a);
    }
  }
  return graph;
}

}  // namespace mcf
