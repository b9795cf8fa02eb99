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

#include "mcf/network.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace mcf {
namespace {

// Union-find for the weak-connectivity check.
class DisjointSets {
 public:
  explicit DisjointSets(NodeId n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  NodeId find(NodeId v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  void unite(NodeId a, NodeId b) { parent_[find(a)] = find(b); }

 private:
  std::vector<NodeId> parent_;
};

// Magnitude headroom: products computed by the solvers (scaled costs,
// artificial-arc bounds) must stay far away from the int64 range.
constexpr Value kHeadroomLimit = INT64_MAX / 256;

bool fits_headroom(__int128 v) {
  return v <= static_cast<__int128>(kHeadroomLimit);
}

}  // namespace

Network build_network(NodeId node_count,
                      std::vector<std::pair<NodeId, NodeId>> arcs,
                      std::vector<Value> capacities, std::vector<Value> costs,
                      std::vector<Value> supplies) {
  if (node_count <= 0) {
    throw std::invalid_argument("node count must be positive");
  }
  if (arcs.size() != capacities.size() || arcs.size() != costs.size() ||
      supplies.size() != static_cast<std::size_t>(node_count)) {
    throw std::invalid_argument("inconsistent input lengths");
  }

  for (const auto& [src, dst] : arcs) {
    if (src < 0 || src >= node_count || dst < 0 || dst >= node_count) {
      throw std::invalid_argument("arc endpoint out of range");
    }
    if (src == dst) {
      throw Error(ErrorCode::kSelfLoop, "self-loop arcs are not supported");
    }
  }
  for (Value u : capacities) {
    if (u < 0) {
      throw Error(ErrorCode::kNegativeCapacity,
                  "arc capacity must be nonnegative");
    }
  }

  Value supply_sum = 0;
  for (Value b : supplies) supply_sum += b;
  if (supply_sum != 0) {
    throw Error(ErrorCode::kUnbalancedSupply,
                "node supplies must sum to zero, got " +
                    std::to_string(supply_sum));
  }

  DisjointSets components(node_count);
  for (const auto& [src, dst] : arcs) components.unite(src, dst);
  const NodeId root = components.find(0);
  for (NodeId v = 1; v < node_count; ++v) {
    if (components.find(v) != root) {
      throw Error(ErrorCode::kDisconnected, "graph is not weakly connected");
    }
  }

  Value max_cost = 0;
  bool has_negative = false;
  for (Value c : costs) {
    has_negative = has_negative || c < 0;
    max_cost = std::max(max_cost, std::abs(c));
  }
  Value max_magnitude = 0;
  for (Value b : supplies) max_magnitude = std::max(max_magnitude, std::abs(b));
  for (Value u : capacities) max_magnitude = std::max(max_magnitude, u);

  // 2*alpha_max*n*C covers scaled costs and the epsilon ladder; n*U*C covers
  // artificial arcs and objective magnitudes.
  if (!fits_headroom(static_cast<__int128>(2) * kMaxScalingFactor *
                     node_count * max_cost) ||
      !fits_headroom(static_cast<__int128>(node_count) * max_magnitude *
                     max_cost)) {
    throw Error(ErrorCode::kOverflowRisk,
                "instance magnitudes leave no 64-bit headroom");
  }

  Network net;
  net.node_count_ = node_count;
  net.source_.reserve(arcs.size());
  net.target_.reserve(arcs.size());
  for (const auto& [src, dst] : arcs) {
    net.source_.push_back(src);
    net.target_.push_back(dst);
  }
  net.capacity_ = std::move(capacities);
  net.cost_ = std::move(costs);
  net.supply_ = std::move(supplies);
  net.has_negative_cost_ = has_negative;
  return net;
}

Magnitudes magnitudes(const Network& network) {
  Magnitudes m;
  for (NodeId v = 0; v < network.node_count(); ++v) {
    m.max_supply_or_capacity =
        std::max(m.max_supply_or_capacity, std::abs(network.supply(v)));
  }
  for (ArcId a = 0; a < network.arc_count(); ++a) {
    m.max_supply_or_capacity =
        std::max(m.max_supply_or_capacity, network.capacity(a));
    m.max_cost = std::max(m.max_cost, std::abs(network.cost(a)));
  }
  return m;
}

}  // namespace mcf
