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

#ifndef MCF_NETWORK_HPP
#define MCF_NETWORK_HPP

#include <utility>
#include <vector>

#include "mcf/error.hpp"
#include "mcf/types.hpp"

namespace mcf {

// An immutable minimum-cost flow instance: a weakly connected directed
// graph with per-arc capacities and costs and per-node signed supplies.
// Instances are validated on construction (see build_network) and safely
// shareable across threads afterwards.
class Network {
 public:
  NodeId node_count() const { return node_count_; }
  ArcId arc_count() const { return static_cast<ArcId>(source_.size()); }

  NodeId arc_source(ArcId a) const { return source_[a]; }
  NodeId arc_target(ArcId a) const { return target_[a]; }
  Value capacity(ArcId a) const { return capacity_[a]; }
  Value cost(ArcId a) const { return cost_[a]; }
  Value supply(NodeId v) const { return supply_[v]; }

  const std::vector<Value>& capacities() const { return capacity_; }
  const std::vector<Value>& costs() const { return cost_; }
  const std::vector<Value>& supplies() const { return supply_; }

  bool has_negative_cost() const { return has_negative_cost_; }

  bool operator==(const Network& other) const = default;

 private:
  friend Network build_network(NodeId node_count,
                               std::vector<std::pair<NodeId, NodeId>> arcs,
                               std::vector<Value> capacities,
                               std::vector<Value> costs,
                               std::vector<Value> supplies);

  Network() = default;

  NodeId node_count_ = 0;
  std::vector<NodeId> source_;
  std::vector<NodeId> target_;
  std::vector<Value> capacity_;
  std::vector<Value> cost_;
  std::vector<Value> supply_;
  bool has_negative_cost_ = false;
};

// Validates and builds a Network.
//
// Rejects: supplies that do not sum to zero (UnbalancedSupply), negative
// capacities (NegativeCapacity), self-loops (SelfLoop), graphs that are not
// weakly connected (Disconnected), and instances whose magnitudes leave no
// headroom for scaled-cost arithmetic (OverflowRisk). Parallel arcs and
// zero-capacity arcs are accepted; the latter behave as permanently
// saturated at zero.
Network build_network(NodeId node_count,
                      std::vector<std::pair<NodeId, NodeId>> arcs,
                      std::vector<Value> capacities, std::vector<Value> costs,
                      std::vector<Value> supplies);

// The magnitude bounds U and C: U is the largest node supply magnitude or
// arc capacity, C the largest arc cost (largest |cost| when negative costs
// are present).
struct Magnitudes {
  Value max_supply_or_capacity = 0;  // U
  Value max_cost = 0;                // C
};

Magnitudes magnitudes(const Network& network);

}  // namespace mcf

#endif  // MCF_NETWORK_HPP
