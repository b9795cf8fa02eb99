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

#include "mcf/cycle_cancel.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "detail/bellman_ford.hpp"
#include "detail/max_flow.hpp"
#include "mcf/error.hpp"
#include "mcf/minmean.hpp"
#include "mcf/residual.hpp"

namespace mcf {
namespace {

Value total_positive_supply(const Network& network) {
  Value total = 0;
  for (NodeId v = 0; v < network.node_count(); ++v) {
    if (network.supply(v) > 0) total += network.supply(v);
  }
  return total;
}

SolveResult finish(const Network& network, const ResidualStore& store,
                   SolverReport report, const WallTimer& timer) {
  SolveResult result;
  result.flow = store.extract_flow();
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

// Geometric Bellman-Ford pause schedule: floor(2 * 1.5^k) for k = 0, 1, ...
NodeId pause_at(int k) {
  return static_cast<NodeId>(std::floor(2.0 * std::pow(1.5, k)));
}

}  // namespace

std::optional<FlowState> initial_feasible_flow(const Network& network) {
  const NodeId n = network.node_count();
  detail::MaxFlowGraph graph(n + 2);
  const NodeId source = n, sink = n + 1;
  std::vector<ArcId> arc_ids(network.arc_count());
  for (ArcId a = 0; a < network.arc_count(); ++a) {
    arc_ids[a] = graph.add_arc(network.arc_source(a), network.arc_target(a),
                               network.capacity(a));
  }
  for (NodeId v = 0; v < n; ++v) {
    if (network.supply(v) > 0) {
      graph.add_arc(source, v, network.supply(v));
    } else if (network.supply(v) < 0) {
      graph.add_arc(v, sink, -network.supply(v));
    }
  }
  const Value delivered = graph.max_flow(source, sink);
  if (delivered != total_positive_supply(network)) return std::nullopt;

  FlowState state = make_zero_flow_state(network);
  for (ArcId a = 0; a < network.arc_count(); ++a) {
    state.flow[a] = graph.flow_on(arc_ids[a]);
  }
  state.excess.assign(n, 0);
  return state;
}

SolveResult solve_scc(const Network& network,
                      const CycleCancelOptions& options) {
  const WallTimer timer;
  const Deadline deadline(options.timeout_seconds);
  SolverReport report;

  auto initial = initial_feasible_flow(network);
  if (!initial.has_value()) {
    return failed(SolveStatus::kInfeasible, report, timer);
  }
  ResidualStore store(network, initial->flow);
  const NodeId n = network.node_count();
  const auto length = [&store](ArcId a) { return store.cost(a); };

  std::vector<Value> dist(n);
  std::vector<ArcId> pred(n);
  bool optimal = false;
  while (!optimal) {
    std::fill(dist.begin(), dist.end(), 0);
    std::fill(pred.begin(), pred.end(), kInvalidArc);
    NodeId passes = 0;
    int pause_index = 0;
    bool converged = false;
    bool canceled_any = false;
    while (!converged && !canceled_any) {
      if (deadline.expired()) return failed(SolveStatus::kTimeout, report, timer);
      const NodeId target = std::min<NodeId>(pause_at(pause_index), n);
      while (passes < target) {
        ++passes;
        if (!detail::bellman_ford_pass(store, dist, pred, length)) {
          converged = true;
          break;
        }
      }
      if (converged) break;
      // Pause: harvest node-disjoint cycles and cancel the negative ones.
      for (const auto& arcs : detail::harvest_pred_cycles(store, pred)) {
        Value total = 0, bottleneck = store.capacity(arcs.front());
        for (ArcId a : arcs) {
          total += store.cost(a);
          bottleneck = std::min(bottleneck, store.capacity(a));
        }
        if (total >= 0 || bottleneck <= 0) continue;
        for (ArcId a : arcs) store.push(a, bottleneck);
        ++report.iterations;
        canceled_any = true;
      }
      if (passes >= n && !canceled_any) {
        // A full n-pass run that still improves labels must expose a
        // negative predecessor cycle.
        throw Error(ErrorCode::kInternalInconsistency,
                    "Bellman-Ford did not converge within n passes and no "
                    "cycle was harvested");
      }
      ++pause_index;
    }
    optimal = converged && !canceled_any;
  }
  return finish(network, store, report, timer);
}

SolveResult solve_mmcc(const Network& network,
                       const CycleCancelOptions& options) {
  const WallTimer timer;
  const Deadline deadline(options.timeout_seconds);
  SolverReport report;

  auto initial = initial_feasible_flow(network);
  if (!initial.has_value()) {
    return failed(SolveStatus::kInfeasible, report, timer);
  }
  ResidualStore store(network, initial->flow);
  std::vector<ArcId> arc_map;
  while (true) {
    if (deadline.expired()) return failed(SolveStatus::kTimeout, report, timer);
    const ArcListGraph graph = positive_residual_graph(store, &arc_map);
    const auto cycle = min_mean_cycle(graph, MinMeanMethod::kCombined);
    if (!cycle.has_value() || cycle->mean.total_cost >= 0) break;
    Value bottleneck = store.capacity(arc_map[cycle->arcs.front()]);
    for (ArcId a : cycle->arcs) {
      bottleneck = std::min(bottleneck, store.capacity(arc_map[a]));
    }
    assert(bottleneck > 0);
    for (ArcId a : cycle->arcs) store.push(arc_map[a], bottleneck);
    ++report.iterations;
  }
  return finish(network, store, report, timer);
}

namespace {

// Cancel-and-tighten working state over scaled costs.
class CatSolver {
 public:
  CatSolver(const Network& network, const CatOptions& options,
            ResidualStore store)
      : network_(network),
        options_(options),
        store_(std::move(store)),
        n_(network.node_count()),
        scale_(options.alpha * network.node_count()),
        potential_(network.node_count(), 0) {}

  SolveResult run() {
    const WallTimer timer;
    const Deadline deadline(options_.timeout_seconds);
    SolverReport report;

    const Value max_cost = magnitudes(network_).max_cost;
    if (max_cost == 0) {
      // All-zero costs: any feasible flow is optimal.
      return finish(network_, store_, report, timer);
    }
    epsilon_ = initial_epsilon(max_cost);
    const NodeId strict_period =
        std::max<NodeId>(1, static_cast<NodeId>(std::sqrt(double(n_))));
    NodeId rounds_since_strict = 0;

    while (true) {
      if (deadline.expired()) {
        return failed(SolveStatus::kTimeout, report, timer);
      }
      cancel_admissible_cycles(report);
      if (options_.check_invariants) check_invariants_after_cancel();
      ++rounds_since_strict;

      bool want_strict = rounds_since_strict >= strict_period;
      if (!want_strict) {
        // Relaxed tighten; escalates when the integral step underflows.
        if (!relaxed_tighten()) want_strict = true;
      }
      if (want_strict) {
        rounds_since_strict = 0;
        if (strict_tighten(report)) break;  // optimal
      }
      if (epsilon_ == 0) break;
    }
    return finish(network_, store_, report, timer);
  }

 private:
  Value scaled_cost(ArcId a) const { return store_.cost(a) * scale_; }

  Value reduced(ArcId a) const {
    return scaled_cost(a) + potential_[store_.tail(a)] -
           potential_[store_.head(a)];
  }

  bool admissible(ArcId a) const {
    return store_.capacity(a) > 0 && reduced(a) < 0;
  }

  Value initial_epsilon(Value max_cost) const {
    // alpha^ceil(log_alpha(alpha*n*C)) over the scaled costs.
    const Value target = options_.alpha * n_ * max_cost;
    Value eps = 1;
    while (eps < target) eps *= options_.alpha;
    return eps;
  }

  // DFS-cancels cycles of negative reduced-cost arcs until the admissible
  // network is acyclic. Only saturations happen while potentials are fixed,
  // so dead (fully explored) nodes stay dead.
  void cancel_admissible_cycles(SolverReport& report) {
    std::vector<char> color(n_, 0);  // 0 new, 1 on stack, 2 done
    std::vector<ArcId> iter(n_);
    std::vector<NodeId> stack;
    std::vector<ArcId> entry(n_, kInvalidArc);
    std::vector<NodeId> pos_on_stack(n_, -1);

    for (NodeId root = 0; root < n_; ++root) {
      if (color[root] != 0) continue;
      stack.assign(1, root);
      color[root] = 1;
      pos_on_stack[root] = 0;
      iter[root] = store_.out_begin(root);
      while (!stack.empty()) {
        const NodeId u = stack.back();
        bool advanced = false;
        while (iter[u] < store_.out_end(u)) {
          const ArcId a = iter[u];
          if (!admissible(a)) {
            ++iter[u];
            continue;
          }
          const NodeId v = store_.head(a);
          if (color[v] == 2) {
            ++iter[u];
            continue;
          }
          if (color[v] == 0) {
            color[v] = 1;
            entry[v] = a;
            pos_on_stack[v] = static_cast<NodeId>(stack.size());
            stack.push_back(v);
            iter[v] = store_.out_begin(v);
            advanced = true;
            break;
          }
          // v is on the stack: the segment from v plus arc a closes an
          // admissible cycle.
          cancel_cycle(pos_on_stack[v], a, stack, entry, report);
          // Trim the stack past the first saturated arc of the cycle.
          trim_after_cancel(a, stack, color, pos_on_stack);
          advanced = true;
          break;
        }
        if (advanced) continue;
        color[u] = 2;
        pos_on_stack[u] = -1;
        stack.pop_back();
      }
    }
  }

  void cancel_cycle(NodeId anchor_pos, ArcId closing_arc,
                    const std::vector<NodeId>& stack,
                    const std::vector<ArcId>& entry, SolverReport& report) {
    cycle_arcs_.clear();
    for (std::size_t i = anchor_pos + 1; i < stack.size(); ++i) {
      cycle_arcs_.push_back(entry[stack[i]]);
    }
    cycle_arcs_.push_back(closing_arc);
    Value bottleneck = store_.capacity(cycle_arcs_.front());
    for (ArcId a : cycle_arcs_) {
      bottleneck = std::min(bottleneck, store_.capacity(a));
    }
    assert(bottleneck > 0);
    for (ArcId a : cycle_arcs_) store_.push(a, bottleneck);
    ++report.iterations;  // canceled cycles
  }

  void trim_after_cancel(ArcId closing_arc, std::vector<NodeId>& stack,
                         std::vector<char>& color,
                         std::vector<NodeId>& pos_on_stack) {
    // Find the tail of the first saturated cycle arc, walking the cycle
    // from the anchor.
    NodeId keep = kInvalidNode;
    for (ArcId a : cycle_arcs_) {
      if (store_.capacity(a) == 0) {
        keep = store_.tail(a);
        break;
      }
    }
    assert(keep != kInvalidNode);
    if (keep == store_.tail(closing_arc)) return;  // current top stays
    const std::size_t keep_pos = pos_on_stack[keep];
    for (std::size_t i = stack.size(); i-- > keep_pos + 1;) {
      color[stack[i]] = 0;
      pos_on_stack[stack[i]] = -1;
    }
    stack.resize(keep_pos + 1);
  }

  // Longest-path levels over the admissible network (acyclic after the
  // cancel step), then the potential shift of -level(v)*floor(eps/n) and an
  // exact rescan of the violation. Returns false when floor(eps/n) == 0.
  bool relaxed_tighten() {
    const Value step = epsilon_ / n_;
    if (step == 0) return false;

    std::vector<NodeId> indegree(n_, 0);
    for (NodeId u = 0; u < n_; ++u) {
      for (ArcId a = store_.out_begin(u); a < store_.out_end(u); ++a) {
        if (admissible(a)) ++indegree[store_.head(a)];
      }
    }
    std::vector<NodeId> queue;
    queue.reserve(n_);
    for (NodeId v = 0; v < n_; ++v) {
      if (indegree[v] == 0) queue.push_back(v);
    }
    std::vector<Value> level(n_, 0);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const NodeId u = queue[i];
      for (ArcId a = store_.out_begin(u); a < store_.out_end(u); ++a) {
        if (!admissible(a)) continue;
        const NodeId v = store_.head(a);
        level[v] = std::max(level[v], level[u] + 1);
        if (--indegree[v] == 0) queue.push_back(v);
      }
    }
    assert(queue.size() == static_cast<std::size_t>(n_));
    for (NodeId v = 0; v < n_; ++v) potential_[v] -= level[v] * step;

    // Largest epsilon decrease consistent with the new potentials.
    epsilon_ = std::min(epsilon_, max_violation());
    return true;
  }

  Value max_violation() const {
    Value worst = 0;
    for (NodeId u = 0; u < n_; ++u) {
      for (ArcId a = store_.out_begin(u); a < store_.out_end(u); ++a) {
        if (store_.capacity(a) <= 0) continue;
        worst = std::max(worst, -reduced(a));
      }
    }
    return worst;
  }

  // Exact epsilon via the combined minimum-mean cycle method on the scaled
  // residual costs, plus potentials recomputed by shortest paths under
  // c + epsilon. Returns true when the flow is proven optimal.
  bool strict_tighten(SolverReport& report) {
    ++report.phases_run;  // strict tighten counter
    std::vector<ArcId> arc_map;
    ArcListGraph graph = positive_residual_graph(store_, &arc_map);
    for (Value& c : graph.cost) c *= scale_;
    const auto cycle = min_mean_cycle(graph, MinMeanMethod::kCombined);
    // Optimal iff the scaled min mean is > -alpha, i.e. eps(x) < 1/n in
    // original cost units.
    if (!cycle.has_value() ||
        -cycle->mean.total_cost < options_.alpha * cycle->mean.length) {
      epsilon_ = 0;
      return true;
    }
    const Value total = cycle->mean.total_cost;
    const Value len = cycle->mean.length;
    epsilon_ = (-total + len - 1) / len;  // ceil(-total/len)

    // Certifying potentials: Bellman-Ford with lengths c + eps.
    const NodeId n = n_;
    std::vector<Value> dist(n, 0);
    std::vector<ArcId> pred(n, kInvalidArc);
    const auto length = [this](ArcId a) { return scaled_cost(a) + epsilon_; };
    bool changed = true;
    for (NodeId pass = 0; pass < n && changed; ++pass) {
      changed = detail::bellman_ford_pass(store_, dist, pred, length);
    }
    if (changed) {
      throw Error(ErrorCode::kInternalInconsistency,
                  "tighten lengths admit a negative cycle");
    }
    for (NodeId v = 0; v < n; ++v) potential_[v] = -dist[v];

    if (options_.strict_tighten_hook) {
      options_.strict_tighten_hook(epsilon_, store_.extract_flow());
    }
    return false;
  }

  void check_invariants_after_cancel() {
    // Epsilon-optimality scan.
    for (NodeId u = 0; u < n_; ++u) {
      for (ArcId a = store_.out_begin(u); a < store_.out_end(u); ++a) {
        if (store_.capacity(a) > 0 && reduced(a) < -epsilon_) {
          throw Error(ErrorCode::kInternalInconsistency,
                      "epsilon-optimality violated after cancel step");
        }
      }
    }
    // Admissible network must be acyclic: Kahn over admissible arcs.
    std::vector<NodeId> indegree(n_, 0);
    NodeId processed = 0;
    for (NodeId u = 0; u < n_; ++u) {
      for (ArcId a = store_.out_begin(u); a < store_.out_end(u); ++a) {
        if (admissible(a)) ++indegree[store_.head(a)];
      }
    }
    std::vector<NodeId> queue;
    for (NodeId v = 0; v < n_; ++v) {
      if (indegree[v] == 0) queue.push_back(v);
    }
    for (std::size_t i = 0; i < queue.size(); ++i) {
      ++processed;
      for (ArcId a = store_.out_begin(queue[i]); a < store_.out_end(queue[i]);
           ++a) {
        if (!admissible(a)) continue;
        if (--indegree[store_.head(a)] == 0) queue.push_back(store_.head(a));
      }
    }
    if (processed != n_) {
      throw Error(ErrorCode::kInternalInconsistency,
                  "admissible network cyclic after cancel step");
    }
  }

  const Network& network_;
  const CatOptions& options_;
  ResidualStore store_;
  NodeId n_;
  Value scale_;
  std::vector<Value> potential_;
  Value epsilon_ = 0;
  std::vector<ArcId> cycle_arcs_;
};

}  // namespace

SolveResult solve_cat(const Network& network, const CatOptions& options) {
  const WallTimer timer;
  SolverReport report;
  if (options.alpha < 2 || options.alpha > kMaxScalingFactor) {
    throw Error(ErrorCode::kInvalidSpec, "alpha must be in [2, 64]");
  }
  auto initial = initial_feasible_flow(network);
  if (!initial.has_value()) {
    return failed(SolveStatus::kInfeasible, report, timer);
  }
  CatSolver solver(network, options, ResidualStore(network, initial->flow));
  return solver.run();
}

}  // namespace mcf
