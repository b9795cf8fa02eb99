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

#ifndef MCF_MINMEAN_HPP
#define MCF_MINMEAN_HPP

#include <optional>
#include <vector>

#include "mcf/arc_list_graph.hpp"
#include "mcf/types.hpp"

namespace mcf {

// Exact mean cost of a directed cycle: total cost over arc count. Never
// converted to floating point; comparisons cross-multiply in 128 bits.
struct MeanValue {
  Value total_cost = 0;
  Value length = 1;  // positive
};

inline bool mean_less(const MeanValue& a, const MeanValue& b) {
  return static_cast<__int128>(a.total_cost) * b.length <
         static_cast<__int128>(b.total_cost) * a.length;
}

inline bool mean_equal(const MeanValue& a, const MeanValue& b) {
  return static_cast<__int128>(a.total_cost) * b.length ==
         static_cast<__int128>(b.total_cost) * a.length;
}

// mean compared against a plain integer value.
inline bool mean_less_than_value(const MeanValue& a, Value v) {
  return a.total_cost < v * a.length;
}

enum class MinMeanMethod { kKarp, kHartmannOrlin, kHoward, kCombined };

struct MinMeanCycle {
  std::vector<ArcId> arcs;  // arc indices into the input graph, in cycle order
  MeanValue mean;
};

// Finds a directed cycle of minimum mean cost, or nullopt if the graph is
// acyclic. Graphs need not be strongly connected; each strongly connected
// component is solved separately and the minimum taken.
//
// All methods return the same MeanValue (the cycles themselves may differ).
// howard_iteration_limit caps Howard's policy-improvement rounds; 0 means
// no limit for kHoward, and the component size for kCombined (which falls
// back to Hartmann-Orlin when the limit is hit).
std::optional<MinMeanCycle> min_mean_cycle(
    const ArcListGraph& graph, MinMeanMethod method,
    std::int64_t howard_iteration_limit = 0);

}  // namespace mcf

#endif  // MCF_MINMEAN_HPP
