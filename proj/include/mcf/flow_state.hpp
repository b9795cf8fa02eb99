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

#ifndef MCF_FLOW_STATE_HPP
#define MCF_FLOW_STATE_HPP

#include <vector>

#include "mcf/network.hpp"
#include "mcf/types.hpp"

namespace mcf {

// Mutable solver state: per-arc flow, per-node potential and excess.
// Single-owner; one solver, one thread.
struct FlowState {
  std::vector<Value> flow;       // per original arc, 0 <= flow <= capacity
  std::vector<Value> potential;  // per node
  std::vector<Value> excess;     // per node, b_i + inflow - outflow
};

// Zero flow, zero potentials; excesses equal the supplies.
FlowState make_zero_flow_state(const Network& network);

// Reduced cost of an arc with respect to node potentials:
// cost + potential(source) - potential(target).
inline Value reduced_cost(Value cost, Value source_potential,
                          Value target_potential) {
  return cost + source_potential - target_potential;
}

inline Value reduced_cost(const Network& network, ArcId arc,
                          const std::vector<Value>& potential) {
  return reduced_cost(network.cost(arc), potential[network.arc_source(arc)],
                      potential[network.arc_target(arc)]);
}

// Signed excess of a node: supply + inflow - outflow.
Value node_excess(const Network& network, const std::vector<Value>& flow,
                  NodeId node);

// Excesses of all nodes in one pass.
std::vector<Value> excess_vector(const Network& network,
                                 const std::vector<Value>& flow);

// Total cost of a flow against the network's (original) arc costs.
Value flow_cost(const Network& network, const std::vector<Value>& flow);

}  // namespace mcf

#endif  // MCF_FLOW_STATE_HPP
