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

#ifndef MCF_CYCLE_CANCEL_HPP
#define MCF_CYCLE_CANCEL_HPP

#include <functional>
#include <optional>

#include "mcf/flow_state.hpp"
#include "mcf/network.hpp"
#include "mcf/report.hpp"

namespace mcf {

// A feasible flow established by a max-flow computation from a super-source
// to a super-sink, or nullopt when the instance is infeasible (the maximum
// deliverable flow falls short of the total supply).
std::optional<FlowState> initial_feasible_flow(const Network& network);

struct CycleCancelOptions {
  double timeout_seconds = 0;  // <= 0: no limit
};

// Simple cycle-canceling: Bellman-Ford runs paused on a geometric iteration
// schedule; at each pause all node-disjoint negative cycles found in the
// predecessor subgraph are canceled by their bottleneck capacities.
// report.iterations counts canceled cycles.
SolveResult solve_scc(const Network& network,
                      const CycleCancelOptions& options = {});

// Minimum-mean cycle-canceling: cancels a minimum-mean negative cycle per
// iteration, found by the combined Howard / Hartmann-Orlin method.
// report.iterations counts canceled cycles.
SolveResult solve_mmcc(const Network& network,
                       const CycleCancelOptions& options = {});

struct CatOptions {
  // Costs are premultiplied by alpha*n so epsilon stays integral, mirroring
  // the cost-scaling solver's scheme.
  Value alpha = 16;
  double timeout_seconds = 0;
  // Verifies the epsilon-optimality scan and post-cancel acyclicity of the
  // admissible network after every round (test mode).
  bool check_invariants = false;
  // Invoked after every strict tighten with the scaled epsilon and a flow
  // snapshot; lets tests cross-check epsilon against the independent
  // checker without coupling the solver to it.
  std::function<void(Value scaled_epsilon, const std::vector<Value>& flow)>
      strict_tighten_hook;
};

// Cancel-and-tighten: DFS-cancels admissible cycles, then tightens epsilon,
// relaxing potentials along a topological order of the admissible network;
// a strict tighten (exact minimum-mean recomputation) runs every
// floor(sqrt(n)) rounds. report.iterations counts cancel+tighten rounds.
SolveResult solve_cat(const Network& network, const CatOptions& options = {});

}  // namespace mcf

#endif  // MCF_CYCLE_CANCEL_HPP
