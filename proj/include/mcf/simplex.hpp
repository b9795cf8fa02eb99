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

#ifndef MCF_SIMPLEX_HPP
#define MCF_SIMPLEX_HPP

#include "mcf/network.hpp"
#include "mcf/report.hpp"

namespace mcf {

enum class NsPivotRule {
  kBestEligible,
  kFirstEligible,
  kBlockSearch,
  kCandidateList,
  kAlteringList,
};

struct NsOptions {
  NsPivotRule rule = NsPivotRule::kBlockSearch;
  // Rule parameters; 0 picks the defaults B = floor(sqrt(m)),
  // L = floor(sqrt(m)/4), K = max(1, L/10), H = max(1, B/100).
  ArcId block_size = 0;
  ArcId list_length = 0;
  ArcId minor_limit = 0;
  ArcId head_length = 0;
  // Seeds the first pivots from arcs collected by a reverse partial
  // traversal from the demand nodes.
  bool use_startup_arc_list = true;
  // Re-checks the spanning-tree invariants (zero tree reduced costs,
  // thread/reverse-thread inversion, successor counts, strong feasibility)
  // after every pivot (test mode).
  bool check_invariants = false;
  double timeout_seconds = 0;
};

// Primal network simplex on an XTI (thread + successor count + last
// successor) spanning-tree structure with strong feasibility, started from
// an artificial basis. Accepts costs of any sign. Reports Infeasible iff an
// artificial arc still carries flow at termination. report.iterations
// counts pivots.
SolveResult solve_ns(const Network& network, const NsOptions& options = {});

}  // namespace mcf

#endif  // MCF_SIMPLEX_HPP
