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

#ifndef MCF_AUG_PATH_HPP
#define MCF_AUG_PATH_HPP

#include "mcf/network.hpp"
#include "mcf/report.hpp"

namespace mcf {

// Successive shortest path and capacity-scaling solvers. Both maintain an
// optimal pseudoflow with node potentials and require nonnegative arc costs
// (Error(kNegativeCost) otherwise). Shortest-path searches run on the
// shared residual store with Dijkstra over reduced costs, terminated as
// soon as a suitable deficit node is permanently labeled; potentials are
// then adjusted only for the permanently labeled nodes.

struct SspOptions {
  double timeout_seconds = 0;
};

// report.iterations counts path augmentations; each moves at least one
// unit, so it is bounded by the total positive excess.
SolveResult solve_ssp(const Network& network, const SspOptions& options = {});

struct CasOptions {
  // Scaling factor: Delta starts at alpha^floor(log_alpha U) and is divided
  // by alpha per phase.
  Value alpha = 4;
  // When set, adds an artificial designated node with high-capacity,
  // high-cost arcs to and from every other node, restoring the proved
  // polynomial phase bound. Off by default.
  bool extend_graph = false;
  double timeout_seconds = 0;
};

// Capacity-scaling variant; each augmentation in a Delta-phase moves flow
// between a node with excess >= Delta and one with deficit >= Delta through
// arcs of residual capacity >= Delta, and delivers the maximum possible
// amount. report.iterations counts augmentations, report.phases_run the
// Delta-phases.
SolveResult solve_cas(const Network& network, const CasOptions& options = {});

}  // namespace mcf

#endif  // MCF_AUG_PATH_HPP
