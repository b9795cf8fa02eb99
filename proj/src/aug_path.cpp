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

#include "mcf/aug_path.hpp"

#include <algorithm>

#include "detail/dijkstra.hpp"
#include "mcf/error.hpp"
#include "mcf/residual.hpp"

namespace mcf {
namespace {

void require_nonnegative_costs(const Network& network) {
  if (network.has_negative_cost()) {
    throw Error(ErrorCode::kNegativeCost,
                "SSP/CAS require nonnegative arc costs");
  }
}

// Shared augmenting-engine state.
struct Engine {
  ResidualStore store;
  std::vector<Value> potential;
  std::vector<Value> excess;
  detail::DijkstraWorkspace dijkstra;

  explicit Engine(const Network& network)
      : store(network, std::vector<Value>(network.arc_count(), 0)),
        potential(network.node_count(), 0),
        excess(network.supplies()),
        dijkstra(network.node_count()) {}

  // Augments from source to the nearest deficit node in the delta-residual
  // network; returns false when no such node is reachable. Excesses, the
  // store, and the potentials are updated in place.
  bool augment(NodeId source, Value delta) {
    const NodeId sink = dijkstra.search(store, potential, excess, source, delta);
    if (sink == kInvalidNode) return false;

    // Potentials move only for permanently labeled nodes.
    const Value sink_dist = dijkstra.dist(sink);
    for (NodeId v : dijkstra.permanent_nodes()) {
      potential[v] -= sink_dist - dijkstra.dist(v);
    }

    // Maximum deliverable amount along the predecessor path.
    Value bottleneck = std::min(excess[source], -excess[sink]);
    for (NodeId v = sink; v != source; v = store.tail(dijkstra.pred_arc(v))) {
      bottleneck = std::min(bottleneck, store.capacity(dijkstra.pred_arc(v)));
    }
    for (NodeId v = sink; v != source; v = store.tail(dijkstra.pred_arc(v))) {
      store.push(dijkstra.pred_arc(v), bottleneck);
    }
    excess[source] -= bottleneck;
    excess[sink] += bottleneck;
    return true;
  }
};

SolveResult finish(const Network& network, const Engine& engine,
                   SolverReport report, const WallTimer& timer) {
  SolveResult result;
  result.flow = engine.store.extract_flow();
  report.objective = flow_cost(network, result.flow);
  report.wall_time_ms = timer.elapsed_ms();
  result.report = std::move(report);
  return result;
}

SolveResult failed(SolveStatus status, SolverReport report,
                   const WallTimer& timer) {
  report.status = status;
  report.wall_time_ms = timer.elapsed_ms();
  return SolveResult{std::move(report), {}};
}

}  // namespace

SolveResult solve_ssp(const Network& network, const SspOptions& options) {
  const WallTimer timer;
  const Deadline deadline(options.timeout_seconds);
  require_nonnegative_costs(network);
  SolverReport report;
  Engine engine(network);

  // Excesses never grow back above zero, so a single index sweep suffices.
  for (NodeId v = 0; v < network.node_count();) {
    if (engine.excess[v] <= 0) {
      ++v;
      continue;
    }
    if (deadline.expired()) return failed(SolveStatus::kTimeout, report, timer);
    if (!engine.augment(v, 1)) {
      return failed(SolveStatus::kInfeasible, report, timer);
    }
    ++report.iterations;
  }
  return finish(network, engine, report, timer);
}

namespace {

SolveResult solve_cas_direct(const Network& network, const CasOptions& options,
                             const WallTimer& timer) {
  const Deadline deadline(options.timeout_seconds);
  SolverReport report;
  Engine engine(network);

  const Value max_magnitude = magnitudes(network).max_supply_or_capacity;
  Value delta = 1;
  while (delta <= max_magnitude / options.alpha) delta *= options.alpha;

  for (;; delta /= options.alpha) {
    ++report.phases_run;
    // Phase start: saturate delta-residual arcs violating the reduced-cost
    // conditions. Saturating an arc only grows its sister's capacity, and
    // the sister's reduced cost is positive, so one pass in index order is
    // exhaustive.
    for (ArcId a = 0; a < engine.store.arc_count(); ++a) {
      if (engine.store.capacity(a) < delta) continue;
      const NodeId u = engine.store.tail(a), v = engine.store.head(a);
      const Value rc =
          engine.store.cost(a) + engine.potential[u] - engine.potential[v];
      if (rc >= 0) continue;
      const Value amount = engine.store.capacity(a);
      engine.store.push(a, amount);
      engine.excess[u] -= amount;
      engine.excess[v] += amount;
    }

    for (NodeId v = 0; v < network.node_count();) {
      if (engine.excess[v] < delta) {
        ++v;
        continue;
      }
      if (deadline.expired()) {
        return failed(SolveStatus::kTimeout, report, timer);
      }
      if (!engine.augment(v, delta)) {
        if (delta == 1) {
          // The 1-residual network is the residual network; an unreachable
          // deficit set means the instance is infeasible.
          return failed(SolveStatus::kInfeasible, report, timer);
        }
        // Leftover excess waits for the subsequent phases.
        ++v;
        continue;
      }
      ++report.iterations;
    }
    if (delta == 1) break;
  }
  return finish(network, engine, report, timer);
}

}  // namespace

SolveResult solve_cas(const Network& network, const CasOptions& options) {
  const WallTimer timer;
  require_nonnegative_costs(network);
  if (options.alpha < 2 || options.alpha > kMaxScalingFactor) {
    throw Error(ErrorCode::kInvalidSpec, "alpha must be in [2, 64]");
  }
  if (!options.extend_graph) {
    return solve_cas_direct(network, options, timer);
  }

  // Designated-node extension: an artificial node with high-capacity,
  // high-cost arcs to and from every original node. Any optimal solution of
  // a feasible instance leaves them empty; residual flow on them at the end
  // signals infeasibility.
  const NodeId n = network.node_count();
  const Magnitudes mag = magnitudes(network);
  const Value big_cap = static_cast<Value>(n) * mag.max_supply_or_capacity;
  const Value big_cost = std::max<Value>(static_cast<Value>(n) * mag.max_cost, 1);
  std::vector<std::pair<NodeId, NodeId>> arcs;
  std::vector<Value> caps, costs, supplies = network.supplies();
  for (ArcId a = 0; a < network.arc_count(); ++a) {
    arcs.emplace_back(network.arc_source(a), network.arc_target(a));
    caps.push_back(network.capacity(a));
    costs.push_back(network.cost(a));
  }
  for (NodeId v = 0; v < n; ++v) {
    arcs.emplace_back(v, n);
    caps.push_back(big_cap);
    costs.push_back(big_cost);
    arcs.emplace_back(n, v);
    caps.push_back(big_cap);
    costs.push_back(big_cost);
  }
  supplies.push_back(0);
  const Network extended =
      build_network(n + 1, std::move(arcs), std::move(caps), std::move(costs),
                    std::move(supplies));

  SolveResult result = solve_cas_direct(extended, options, timer);
  if (result.report.status != SolveStatus::kOptimal) return result;
  for (ArcId a = network.arc_count(); a < extended.arc_count(); ++a) {
    if (result.flow[a] != 0) {
      result.report.status = SolveStatus::kInfeasible;
      result.flow.clear();
      return result;
    }
  }
  result.flow.resize(network.arc_count());
  result.report.objective = flow_cost(network, result.flow);
  return result;
}

}  // namespace mcf
