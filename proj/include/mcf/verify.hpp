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

#ifndef MCF_VERIFY_HPP
#define MCF_VERIFY_HPP

#include <optional>
#include <vector>

#include "mcf/minmean.hpp"
#include "mcf/network.hpp"
#include "mcf/residual.hpp"
#include "mcf/types.hpp"

namespace mcf {

// Independent optimality checker. Solvers never call into this module; it
// serves as the acceptance oracle for all of them. All functions are pure
// over immutable inputs.

struct FeasibilityViolation {
  enum class Kind { kConservation, kCapacityExceeded, kNegativeFlow };
  Kind kind;
  // Node index for conservation violations, arc index otherwise.
  std::int32_t index;
};

struct FeasibilityReport {
  bool feasible = false;
  std::vector<FeasibilityViolation> violations;
};

// Checks the conservation and capacity constraints.
FeasibilityReport check_feasible(const Network& network,
                                 const std::vector<Value>& flow);

// A directed cycle in a residual store: residual arc indices in cycle
// order, plus the visited nodes (nodes[i] is the tail of arcs[i]).
struct ResidualCycle {
  std::vector<ArcId> arcs;
  std::vector<NodeId> nodes;
  Value total_cost = 0;
};

// Bellman-Ford negative-cycle search over the positive-residual arcs,
// visiting arcs in index order. Returns the first negative cycle found when
// walking predecessor indices from the lowest-index entry point, or nullopt
// if none exists.
std::optional<ResidualCycle> find_negative_cycle(const ResidualStore& store);

// Potentials under which every positive-residual arc has nonnegative
// reduced cost: negated shortest-path distances from a virtual source.
// Throws Error(kNegativeCycle) if the residual network has a negative
// cycle.
std::vector<Value> optimal_potentials(const ResidualStore& store);

// Exact nonnegative rational.
struct Rational {
  Value num = 0;
  Value den = 1;

  bool is_zero() const { return num == 0; }
};

struct VerifyReport {
  bool feasible = false;
  bool optimal = false;
  // Witness: a negative residual cycle when not optimal, certifying
  // potentials when optimal.
  std::optional<ResidualCycle> negative_cycle;
  std::vector<Value> potentials;
  // epsilon(x); meaningful only for feasible flows.
  Rational epsilon;
};

// Runs the feasibility check, the negative-cycle test, and - when no cycle
// exists - re-checks both the residual reduced-cost conditions and the
// complementary slackness conditions with independently computed
// potentials. The three optimality criteria must agree; disagreement is an
// internal self-test failure (Error(kInternalInconsistency)).
VerifyReport verify_optimality(const Network& network,
                               const std::vector<Value>& flow);

struct EpsilonCertificate {
  Rational epsilon;
  // Potentials certifying epsilon-optimality, as exact rationals over a
  // common denominator.
  std::vector<Value> potential_num;
  Value potential_den = 1;
};

// epsilon(x): zero for optimal flows, otherwise the negation of the
// minimum-mean residual cycle cost, together with certifying potentials
// computed by shortest paths under the modified costs c + epsilon.
// Throws Error(kInfeasibleFlow) for infeasible flows.
EpsilonCertificate epsilon_of_flow(const Network& network,
                                   const std::vector<Value>& flow);

}  // namespace mcf

#endif  // MCF_VERIFY_HPP
