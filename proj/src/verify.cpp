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

#include "mcf/verify.hpp"

#include <numeric>

#include "detail/bellman_ford.hpp"
#include "mcf/error.hpp"
#include "mcf/flow_state.hpp"

namespace mcf {
namespace {

ResidualCycle build_cycle(const ResidualStore& store,
                          const std::vector<ArcId>& arcs) {
  ResidualCycle cycle;
  cycle.arcs = arcs;
  for (ArcId a : arcs) {
    cycle.nodes.push_back(store.tail(a));
    cycle.total_cost += store.cost(a);
  }
  return cycle;
}

Rational reduced(Value num, Value den) {
  const Value g = std::gcd(num, den);
  if (g > 1) return {num / g, den / g};
  return {num, den};
}

// epsilon(x) of a feasible flow's residual store plus the minimum-mean
// cycle that attains it; nullopt when the flow is optimal.
std::optional<MeanValue> residual_min_mean(const ResidualStore& store) {
  const ArcListGraph graph = positive_residual_graph(store);
  auto cycle = min_mean_cycle(graph, MinMeanMethod::kCombined);
  if (!cycle.has_value() || cycle->mean.total_cost >= 0) return std::nullopt;
  return cycle->mean;
}

}  // namespace

FeasibilityReport check_feasible(const Network& network,
                                 const std::vector<Value>& flow) {
  FeasibilityReport report;
  for (ArcId a = 0; a < network.arc_count(); ++a) {
    if (flow[a] < 0) {
      report.violations.push_back(
          {FeasibilityViolation::Kind::kNegativeFlow, a});
    } else if (flow[a] > network.capacity(a)) {
      report.violations.push_back(
          {FeasibilityViolation::Kind::kCapacityExceeded, a});
    }
  }
  const std::vector<Value> excess = excess_vector(network, flow);
  for (NodeId v = 0; v < network.node_count(); ++v) {
    if (excess[v] != 0) {
      report.violations.push_back(
          {FeasibilityViolation::Kind::kConservation, v});
    }
  }
  report.feasible = report.violations.empty();
  return report;
}

std::optional<ResidualCycle> find_negative_cycle(const ResidualStore& store) {
  const NodeId n = store.node_count();
  std::vector<Value> dist(n, 0);
  std::vector<ArcId> pred(n, kInvalidArc);
  const auto length = [&store](ArcId a) { return store.cost(a); };
  for (NodeId pass = 0; pass < n; ++pass) {
    if (!detail::bellman_ford_pass(store, dist, pred, length)) {
      return std::nullopt;
    }
  }
  for (const auto& arcs : detail::harvest_pred_cycles(store, pred)) {
    ResidualCycle cycle = build_cycle(store, arcs);
    if (cycle.total_cost < 0) return cycle;
  }
  throw Error(ErrorCode::kInternalInconsistency,
              "divergent Bellman-Ford run yielded no negative cycle");
}

std::vector<Value> optimal_potentials(const ResidualStore& store) {
  const NodeId n = store.node_count();
  std::vector<Value> dist(n, 0);
  std::vector<ArcId> pred(n, kInvalidArc);
  const auto length = [&store](ArcId a) { return store.cost(a); };
  bool changed = true;
  for (NodeId pass = 0; pass < n && changed; ++pass) {
    changed = detail::bellman_ford_pass(store, dist, pred, length);
  }
  if (changed) {
    throw Error(ErrorCode::kNegativeCycle,
                "residual network has a negative cycle");
  }
  for (Value& d : dist) d = -d;
  return dist;
}

VerifyReport verify_optimality(const Network& network,
                               const std::vector<Value>& flow) {
  VerifyReport report;
  report.feasible = check_feasible(network, flow).feasible;
  if (!report.feasible) return report;

  const ResidualStore store(network, flow);
  report.negative_cycle = find_negative_cycle(store);

  if (!report.negative_cycle.has_value()) {
    // Theorem-2 route: certifying potentials must exist; re-check both the
    // residual condition and complementary slackness on the original
    // network. The three verdicts must agree.
    report.potentials = optimal_potentials(store);
    for (ArcId a = 0; a < store.arc_count(); ++a) {
      if (store.capacity(a) <= 0) continue;
      const Value rc = store.cost(a) + report.potentials[store.tail(a)] -
                       report.potentials[store.head(a)];
      if (rc < 0) {
        throw Error(ErrorCode::kInternalInconsistency,
                    "reduced-cost condition failed for computed potentials");
      }
    }
    for (ArcId a = 0; a < network.arc_count(); ++a) {
      const Value rc = reduced_cost(network, a, report.potentials);
      const bool ok = (rc > 0 && flow[a] == 0) || rc == 0 ||
                      (rc < 0 && flow[a] == network.capacity(a));
      if (!ok) {
        throw Error(ErrorCode::kInternalInconsistency,
                    "complementary slackness disagrees with cycle test");
      }
    }
    report.optimal = true;
    report.epsilon = {0, 1};
    return report;
  }

  if (report.negative_cycle->total_cost >= 0) {
    throw Error(ErrorCode::kInternalInconsistency,
                "negative-cycle witness has nonnegative cost");
  }
  report.optimal = false;
  const auto mean = residual_min_mean(store);
  if (!mean.has_value()) {
    throw Error(ErrorCode::kInternalInconsistency,
                "negative cycle found but minimum mean is nonnegative");
  }
  report.epsilon = reduced(-mean->total_cost, mean->length);
  return report;
}

EpsilonCertificate epsilon_of_flow(const Network& network,
                                   const std::vector<Value>& flow) {
  if (!check_feasible(network, flow).feasible) {
    throw Error(ErrorCode::kInfeasibleFlow,
                "epsilon(x) is defined for feasible flows only");
  }
  const ResidualStore store(network, flow);
  EpsilonCertificate cert;

  const auto mean = residual_min_mean(store);
  if (!mean.has_value()) {
    cert.epsilon = {0, 1};
    cert.potential_num = optimal_potentials(store);
    cert.potential_den = 1;
    return cert;
  }
  cert.epsilon = reduced(-mean->total_cost, mean->length);

  // Shortest paths under c' = c + epsilon, carried out over the common
  // denominator so all arithmetic stays integral. No negative cycle exists
  // for these lengths by the choice of epsilon.
  const Value num = cert.epsilon.num, den = cert.epsilon.den;
  const NodeId n = store.node_count();
  std::vector<Value> dist(n, 0);
  std::vector<ArcId> pred(n, kInvalidArc);
  const auto length = [&](ArcId a) { return store.cost(a) * den + num; };
  bool changed = true;
  for (NodeId pass = 0; pass < n && changed; ++pass) {
    changed = detail::bellman_ford_pass(store, dist, pred, length);
  }
  if (changed) {
    throw Error(ErrorCode::kInternalInconsistency,
                "c + epsilon lengths admit a negative cycle");
  }
  for (Value& d : dist) d = -d;
  cert.potential_num = std::move(dist);
  cert.potential_den = den;
  return cert;
}

}  // namespace mcf
