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

#ifndef MCF_COST_SCALING_HPP
#define MCF_COST_SCALING_HPP

#include <functional>

#include "mcf/network.hpp"
#include "mcf/report.hpp"

namespace mcf {

enum class CosVariant {
  kPushRelabel,
  kAugmentRelabel,
  kPartialAugmentRelabel,
};

struct CosOptions {
  CosVariant variant = CosVariant::kPartialAugmentRelabel;
  // Scaling factor; costs are premultiplied by alpha*n and epsilon runs
  // down the ladder alpha^ceil(log_alpha(alpha*n*C)), ..., alpha, 1.
  Value alpha = 16;
  // Partial-augment path length cap. Ignored by kPushRelabel; the
  // augment-relabel variant runs the same machinery with the cap at n.
  NodeId k = 4;
  bool price_refinement = true;
  bool global_update = true;
  // Incompatible with kAugmentRelabel, where it is forced off.
  bool push_look_ahead = true;
  // Runs the epsilon-optimality scan after every phase (test mode).
  bool check_invariants = false;
  // Invoked after every phase with the phase's scaled epsilon and a flow
  // snapshot (tests cross-check against the independent verifier).
  std::function<void(Value scaled_epsilon, const std::vector<Value>& flow)>
      phase_hook;
  double timeout_seconds = 0;
};

// Cost-scaling solver (push-relabel family). Accepts costs of any sign;
// phase starts saturate every residual arc with negative reduced cost.
// report.pushes / report.relabels count the basic operations,
// report.iterations their sum, report.phases_run and report.phases_skipped
// the executed and price-refinement-skipped phases.
SolveResult solve_cos(const Network& network, const CosOptions& options = {});

// Look-ahead bound for pushes into a node: its deficit plus the total
// residual capacity of its admissible outgoing arcs. Exposed for tests.
Value push_look_ahead_limit(const Network& network,
                            const std::vector<Value>& flow,
                            const std::vector<Value>& potential,
                            const std::vector<Value>& excess, NodeId node);

}  // namespace mcf

#endif  // MCF_COST_SCALING_HPP
