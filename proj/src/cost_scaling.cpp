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

#include "mcf/cost_scaling.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "detail/bellman_ford.hpp"
#include "detail/indexed_heap.hpp"
#include "mcf/cycle_cancel.hpp"
#include "mcf/error.hpp"
#include "mcf/residual.hpp"

namespace mcf {
namespace {

enum class StepOutcome { kOk, kInfeasible, kTimeout };

class CosSolver {
 public:
  CosSolver(const Network& network, const CosOptions& options)
      : network_(network),
        options_(options),
        n_(network.node_count()),
        store_(network, std::vector<Value>(network.arc_count(), 0)),
        potential_(n_, 0),
        excess_(network.supplies()),
        current_arc_(n_),
        in_queue_(n_, 0),
        deadline_(options.timeout_seconds),
        look_ahead_(options.push_look_ahead &&
                    options.variant != CosVariant::kAugmentRelabel),
        path_cap_(options.variant == CosVariant::kAugmentRelabel
                      ? network.node_count()
                      : options.k),
        update_period_(std::max<std::int64_t>(1, network.node_count() / 2)) {
    scaled_cost_.resize(store_.arc_count());
    const Value scale = options.alpha * n_;
    for (ArcId a = 0; a < store_.arc_count(); ++a) {
      scaled_cost_[a] = store_.cost(a) * scale;
    }
  }

  SolveResult run() {
    const WallTimer timer;
    SolverReport report;

    if (!options_.global_update && !initial_feasible_flow(network_)) {
      // Without the global update heuristic there is no in-loop separation
      // test, so infeasibility is detected by a max-flow pre-pass.
      report.status = SolveStatus::kInfeasible;
      report.wall_time_ms = timer.elapsed_ms();
      return {std::move(report), {}};
    }

    const Value max_cost = magnitudes(network_).max_cost;
    Value top = 1;  // epsilon ladder top: alpha^ceil(log_alpha(alpha*n*C))
    while (top < options_.alpha * n_ * max_cost) top *= options_.alpha;
    if (static_cast<__int128>(4) * n_ * top >
        static_cast<__int128>(INT64_MAX)) {
      throw Error(ErrorCode::kOverflowRisk,
                  "potential range for the scaled epsilon ladder exceeds "
                  "64-bit headroom");
    }

    for (Value eps = std::max<Value>(top / options_.alpha, 1);;
         eps /= options_.alpha) {
      if (options_.price_refinement && price_refine(eps)) {
        ++report.phases_skipped;
      } else {
        const StepOutcome outcome = refine(eps, report);
        if (outcome != StepOutcome::kOk) {
          report.status = outcome == StepOutcome::kInfeasible
                              ? SolveStatus::kInfeasible
                              : SolveStatus::kTimeout;
          report.iterations = report.pushes + report.relabels;
          report.wall_time_ms = timer.elapsed_ms();
          return {std::move(report), {}};
        }
        ++report.phases_run;
      }
      if (options_.check_invariants) check_epsilon_optimality(eps);
      if (options_.phase_hook) options_.phase_hook(eps, store_.extract_flow());
      if (eps == 1) break;
    }

    SolveResult result;
    result.flow = store_.extract_flow();
    report.objective = flow_cost(network_, result.flow);
    report.iterations = report.pushes + report.relabels;
    report.wall_time_ms = timer.elapsed_ms();
    result.report = std::move(report);
    return result;
  }

 private:
  Value reduced(ArcId a, NodeId tail) const {
    return scaled_cost_[a] + potential_[tail] - potential_[store_.head(a)];
  }

  bool admissible(ArcId a, NodeId tail) const {
    return store_.capacity(a) > 0 && reduced(a, tail) < 0;
  }

  void enqueue_if_active(NodeId v) {
    if (excess_[v] > 0 && !in_queue_[v]) {
      in_queue_[v] = 1;
      queue_.push_back(v);
    }
  }

  // Pops the FIFO queue, skipping entries whose excess was drained by a
  // path augmentation after they were enqueued.
  NodeId pop_active() {
    while (queue_head_ < queue_.size()) {
      const NodeId v = queue_[queue_head_++];
      in_queue_[v] = 0;
      if (excess_[v] > 0) return v;
    }
    return kInvalidNode;
  }

  // Strict relabel: decrease the potential by the largest amount that keeps
  // every outgoing residual arc's reduced cost >= -eps. Only called for
  // nodes with no admissible outgoing arc. Returns false for a node with no
  // outgoing residual capacity at all (separated; infeasible instance).
  bool relabel(NodeId u, Value eps) {
    bool any = false;
    Value best = 0;
    for (ArcId a = store_.out_begin(u); a < store_.out_end(u); ++a) {
      if (store_.capacity(a) <= 0) continue;
      const Value cand = potential_[store_.head(a)] - scaled_cost_[a];
      if (!any || cand > best) {
        best = cand;
        any = true;
      }
    }
    if (!any) return false;
    assert(best - eps < potential_[u]);
    potential_[u] = best - eps;
    current_arc_[u] = store_.out_begin(u);
    ++relabels_;
    ++relabels_since_update_;
    return true;
  }

  // Look-ahead disposal bound of node j, early-exiting once it can no
  // longer cap a push of the given size.
  Value look_ahead_limit(NodeId j, Value needed) const {
    Value limit = std::max<Value>(0, -excess_[j]);
    for (ArcId a = store_.out_begin(j); a < store_.out_end(j) && limit < needed;
         ++a) {
      if (admissible(a, j)) limit += store_.capacity(a);
    }
    return std::min(limit, needed);
  }

  // Runs the global update when the relabel counter is due. Potentials move
  // wholesale, so current-arc positions and any in-flight admissible path
  // are stale afterwards (signaled through path_stale_).
  StepOutcome maybe_global_update(Value eps) {
    if (!options_.global_update || relabels_since_update_ < update_period_) {
      return StepOutcome::kOk;
    }
    relabels_since_update_ = 0;
    if (!global_update(eps)) return StepOutcome::kInfeasible;
    for (NodeId v = 0; v < n_; ++v) current_arc_[v] = store_.out_begin(v);
    path_stale_ = true;
    return StepOutcome::kOk;
  }

  StepOutcome refine(Value eps, SolverReport& report) {
    // Phase start: saturate every residual arc with negative reduced cost.
    // A saturation flips the violation onto the sister arc as a positive
    // reduced cost, so one pass in index order is exhaustive.
    for (NodeId u = 0; u < n_; ++u) {
      for (ArcId a = store_.out_begin(u); a < store_.out_end(u); ++a) {
        if (store_.capacity(a) <= 0 || reduced(a, u) >= 0) continue;
        const Value amount = store_.capacity(a);
        store_.push(a, amount);
        excess_[u] -= amount;
        excess_[store_.head(a)] += amount;
      }
    }
    for (NodeId v = 0; v < n_; ++v) current_arc_[v] = store_.out_begin(v);
    queue_.clear();
    queue_head_ = 0;
    std::fill(in_queue_.begin(), in_queue_.end(), 0);
    for (NodeId v = 0; v < n_; ++v) enqueue_if_active(v);
    relabels_since_update_ = 0;

    NodeId v;
    while ((v = pop_active()) != kInvalidNode) {
      const StepOutcome outcome =
          options_.variant == CosVariant::kPushRelabel
              ? discharge_push_relabel(v, eps)
              : discharge_path(v, eps);
      if (outcome != StepOutcome::kOk) {
        report.pushes = pushes_;
        report.relabels = relabels_;
        return outcome;
      }
      if (queue_head_ > 4096 && 2 * queue_head_ > queue_.size()) {
        queue_.erase(queue_.begin(), queue_.begin() + queue_head_);
        queue_head_ = 0;
      }
    }
    report.pushes = pushes_;
    report.relabels = relabels_;
    return StepOutcome::kOk;
  }

  // Classic FIFO discharge: push on admissible arcs from the current arc,
  // relabel when the arc list is exhausted, until the excess is gone.
  StepOutcome discharge_push_relabel(NodeId v, Value eps) {
    while (excess_[v] > 0) {
      if (++op_counter_ % 4096 == 0 && deadline_.expired()) {
        return StepOutcome::kTimeout;
      }
      ArcId& cur = current_arc_[v];
      if (cur == store_.out_end(v)) {
        if (!relabel(v, eps)) return StepOutcome::kInfeasible;
        const StepOutcome outcome = maybe_global_update(eps);
        path_stale_ = false;  // no path in this variant
        if (outcome != StepOutcome::kOk) return outcome;
        continue;
      }
      if (!admissible(cur, v)) {
        ++cur;
        continue;
      }
      const NodeId j = store_.head(cur);
      Value delta = std::min(excess_[v], store_.capacity(cur));
      if (look_ahead_) {
        const Value limit = look_ahead_limit(j, delta);
        if (limit == 0) {
          // The target can dispose of nothing: relabel it instead of
          // pushing, regardless of its excess, then re-examine the arc.
          if (!relabel(j, eps)) return StepOutcome::kInfeasible;
          const StepOutcome outcome = maybe_global_update(eps);
          path_stale_ = false;
          if (outcome != StepOutcome::kOk) return outcome;
          continue;
        }
        delta = std::min(delta, limit);
      }
      store_.push(cur, delta);
      excess_[v] -= delta;
      excess_[j] += delta;
      ++pushes_;
      enqueue_if_active(j);
    }
    return StepOutcome::kOk;
  }

  // Path discharge shared by the augment-relabel (cap = n) and partial
  // augment-relabel (cap = k) variants: grow an admissible path from v
  // until a deficit node or the length cap, augment with per-arc maximum
  // delivery, retreat one step when a non-root path node is relabeled.
  StepOutcome discharge_path(NodeId v, Value eps) {
    reset_path(v);
    while (excess_[v] > 0) {
      if (++op_counter_ % 4096 == 0 && deadline_.expired()) {
        return StepOutcome::kTimeout;
      }
      const NodeId u = path_.back().node;
      if (excess_[u] < 0 ||
          static_cast<NodeId>(path_.size()) - 1 >= path_cap_) {
        augment();
        reset_path(v);
        continue;
      }
      const StepOutcome outcome = extend_or_relabel(u, v, eps);
      if (outcome != StepOutcome::kOk) return outcome;
      if (path_stale_) {
        path_stale_ = false;
        reset_path(v);
      }
    }
    return StepOutcome::kOk;
  }

  void reset_path(NodeId v) {
    path_.clear();
    path_.push_back({v, kInvalidArc});
  }

  // Advances u's current arc to an admissible candidate and extends the
  // path, or relabels u (with a retreat when u is not the root).
  StepOutcome extend_or_relabel(NodeId u, NodeId root, Value eps) {
    ArcId& cur = current_arc_[u];
    while (cur < store_.out_end(u)) {
      if (!admissible(cur, u)) {
        ++cur;
        continue;
      }
      const NodeId j = store_.head(cur);
      if (look_ahead_ && look_ahead_limit(j, 1) == 0) {
        if (!relabel(j, eps)) return StepOutcome::kInfeasible;
        const StepOutcome outcome = maybe_global_update(eps);
        if (outcome != StepOutcome::kOk) return outcome;
        if (path_stale_) return StepOutcome::kOk;
        continue;  // re-examine the same current arc
      }
      path_.push_back({j, cur});
      return StepOutcome::kOk;
    }
    if (!relabel(u, eps)) return StepOutcome::kInfeasible;
    if (path_.size() > 1) path_.pop_back();  // step back to the previous node
    (void)root;
    return maybe_global_update(eps);
  }

  // Pushes the maximum possible amount on every arc of the path in order,
  // honoring the look-ahead cap; a node that cannot absorb anything more
  // truncates the augmentation.
  void augment() {
    for (std::size_t i = 1; i < path_.size(); ++i) {
      const NodeId tail = path_[i - 1].node;
      const NodeId head = path_[i].node;
      const ArcId arc = path_[i].via;
      Value delta = std::min(excess_[tail], store_.capacity(arc));
      if (look_ahead_) delta = std::min(delta, look_ahead_limit(head, delta));
      if (delta <= 0) break;
      store_.push(arc, delta);
      excess_[tail] -= delta;
      excess_[head] += delta;
      ++pushes_;
    }
    for (std::size_t i = 1; i < path_.size(); ++i) {
      enqueue_if_active(path_[i].node);
    }
  }

  // Iterated set-relabel: grow the deficit-rooted set S backwards through
  // the residual network; whenever no admissible arc enters S, all of S
  // rises by eps. Implemented as one backward Dijkstra in units of eps:
  // dist(u) counts the raises S absorbs before u joins, and a settled node
  // is finally raised by eps*(T - dist) where T is the raise count at which
  // the last active node joined. Every node with dist <= T must be settled
  // for the epsilon-optimality proof to go through, so draining continues
  // to the end of bucket T. Returns false when some active node cannot
  // reach any deficit node (infeasible instance).
  bool global_update(Value eps) {
    NodeId active_left = 0;
    bool any_deficit = false;
    for (NodeId v = 0; v < n_; ++v) {
      if (excess_[v] > 0) ++active_left;
      if (excess_[v] < 0) any_deficit = true;
    }
    if (active_left == 0) return true;
    if (!any_deficit) return false;

    detail::IndexedHeap heap(n_);
    std::vector<Value> dist(n_, -1);
    for (NodeId v = 0; v < n_; ++v) {
      if (excess_[v] < 0) heap.push_or_decrease(v, 0);
    }
    std::vector<NodeId> settled;
    Value stop_dist = -1;
    while (!heap.empty()) {
      const auto [d, u] = heap.pop();
      if (stop_dist >= 0 && d > stop_dist) break;
      dist[u] = d;
      settled.push_back(u);
      if (excess_[u] > 0 && --active_left == 0) stop_dist = d;
      // Incoming residual arcs of u are the sisters of u's outgoing arcs.
      for (ArcId b = store_.out_begin(u); b < store_.out_end(u); ++b) {
        const ArcId a = store_.sister(b);
        if (store_.capacity(a) <= 0) continue;
        const NodeId w = store_.head(b);  // tail of a
        if (dist[w] >= 0) continue;
        const Value rc = reduced(a, w);
        const Value step = rc < 0 ? 0 : rc / eps + 1;
        heap.push_or_decrease(w, d + step);
      }
    }
    if (active_left > 0) return false;
    for (NodeId v : settled) {
      if (dist[v] <= stop_dist) potential_[v] += eps * (stop_dist - dist[v]);
    }
    return true;
  }

  // Price refinement: tries to certify that the current (feasible) flow is
  // already eps-optimal by adjusting potentials only. Bellman-Ford with
  // lengths c + eps over the positive-residual arcs: convergence yields
  // certifying potentials and the refine procedure is skipped; a
  // predecessor-graph cycle at one of the geometrically spaced checkpoints
  // proves the flow is not eps-optimal and aborts the run early.
  bool price_refine(Value eps) {
    for (NodeId v = 0; v < n_; ++v) {
      if (excess_[v] != 0) return false;
    }
    std::vector<Value> dist(n_, 0);
    std::vector<ArcId> pred(n_, kInvalidArc);
    const auto length = [&](ArcId a) { return scaled_cost_[a] + eps; };
    NodeId passes = 0;
    int pause_index = 0;
    while (passes < n_) {
      const auto pause =
          static_cast<NodeId>(std::floor(2.0 * std::pow(1.5, pause_index)));
      const NodeId target = std::min<NodeId>(pause, n_);
      while (passes < target) {
        ++passes;
        if (!detail::bellman_ford_pass(store_, dist, pred, length)) {
          for (NodeId v = 0; v < n_; ++v) potential_[v] = -dist[v];
          return true;
        }
      }
      if (!detail::harvest_pred_cycles(store_, pred).empty()) return false;
      ++pause_index;
    }
    return false;  // still relaxing after n passes: a negative cycle exists
  }

  void check_epsilon_optimality(Value eps) const {
    for (NodeId u = 0; u < n_; ++u) {
      if (excess_[u] != 0) {
        throw Error(ErrorCode::kInternalInconsistency,
                    "nonzero excess after a phase");
      }
      for (ArcId a = store_.out_begin(u); a < store_.out_end(u); ++a) {
        if (store_.capacity(a) > 0 && reduced(a, u) < -eps) {
          throw Error(ErrorCode::kInternalInconsistency,
                      "epsilon-optimality scan failed after a phase");
        }
      }
    }
  }

  struct PathEntry {
    NodeId node;
    ArcId via;
  };

  const Network& network_;
  const CosOptions& options_;
  NodeId n_;
  ResidualStore store_;
  std::vector<Value> scaled_cost_;
  std::vector<Value> potential_;
  std::vector<Value> excess_;
  std::vector<ArcId> current_arc_;
  std::vector<char> in_queue_;
  std::vector<NodeId> queue_;
  std::size_t queue_head_ = 0;
  std::vector<PathEntry> path_;
  bool path_stale_ = false;
  std::int64_t pushes_ = 0;
  std::int64_t relabels_ = 0;
  std::int64_t relabels_since_update_ = 0;
  std::int64_t op_counter_ = 0;
  Deadline deadline_;
  bool look_ahead_;
  NodeId path_cap_;
  std::int64_t update_period_;
};

}  // namespace

SolveResult solve_cos(const Network& network, const CosOptions& options) {
  if (options.alpha < 2 || options.alpha > kMaxScalingFactor) {
    throw Error(ErrorCode::kInvalidSpec, "alpha must be in [2, 64]");
  }
  if (options.k < 1) {
    throw Error(ErrorCode::kInvalidSpec, "k must be positive");
  }
  CosSolver solver(network, options);
  return solver.run();
}

Value push_look_ahead_limit(const Network& network,
                            const std::vector<Value>& flow,
                            const std::vector<Value>& potential,
                            const std::vector<Value>& excess, NodeId node) {
  const ResidualStore store(network, flow);
  Value limit = std::max<Value>(0, -excess[node]);
  for (ArcId a = store.out_begin(node); a < store.out_end(node); ++a) {
    if (store.capacity(a) <= 0) continue;
    const Value rc =
        store.cost(a) + potential[node] - potential[store.head(a)];
    if (rc < 0) limit += store.capacity(a);
  }
  return limit;
}

}  // namespace mcf
