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

#ifndef MCF_ARC_LIST_GRAPH_HPP
#define MCF_ARC_LIST_GRAPH_HPP

#include <vector>

#include "mcf/types.hpp"

namespace mcf {

// A bare costed digraph as parallel arrays. Used as the input of the
// minimum-mean cycle algorithms and as the positive-residual projection of
// a ResidualStore.
struct ArcListGraph {
  NodeId node_count = 0;
  std::vector<NodeId> source;
  std::vector<NodeId> target;
  std::vector<Value> cost;

  ArcId arc_count() const { return static_cast<ArcId>(source.size()); }
};

}  // namespace mcf

#endif  // MCF_ARC_LIST_GRAPH_HPP
