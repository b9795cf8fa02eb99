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

#include "mcf/flow_state.hpp"

namespace mcf {

FlowState make_zero_flow_state(const Network& network) {
  FlowState state;
  state.flow.assign(network.arc_count(), 0);
  state.potential.assign(network.node_count(), 0);
  state.excess = network.supplies();
  return state;
}

Value node_excess(const Network& network, const std::vector<Value>& flow,
                  NodeId node) {
  Value e = network.supply(node);
  for (ArcId a = 0; a < network.arc_count(); ++a) {
    if (network.arc_target(a) == node) e += flow[a];
    if (network.arc_source(a) == node) e -= flow[a];
  }
  return e;
}

std::vector<Value> excess_vector(const Network& network,
                                 const std::vector<Value>& flow) {
  std::vector<Value> excess = network.supplies();
  for (ArcId a = 0; a < network.arc_count(); ++a) {
    excess[network.arc_source(a)] -= flow[a];
    excess[network.arc_target(a)] += flow[a];
  }
  return excess;
}

Value flow_cost(const Network& network, const std::vector<Value>& flow) {
  Value total = 0;
  for (ArcId a = 0; a < network.arc_count(); ++a) {
    total += network.cost(a) * flow[a];
  }
  return total;
}

}  // namespace mcf
