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

#include "mcf/minmean.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace mcf {
namespace {

using Wide = __int128;

constexpr Value kInf = std::numeric_limits<Value>::max();
constexpr Wide kWideInf = std::numeric_limits<Wide>::max();

// One strongly connected component, re-indexed to local contiguous ids.
// Local arc order follows the global arc order, which pins determinism.
struct Component {
  std::vector<NodeId> global_node;     // local -> global
  std::vector<NodeId> arc_source;      // local endpoints
  std::vector<NodeId> arc_target;
  std::vector<Value> arc_cost;
  std::vector<ArcId> global_arc;       // local -> global
  std::vector<ArcId> first_out;        // CSR over local arcs (size s+1)
  std::vector<ArcId> out_arcs;         // arc ids ordered by (source, arc id)

  NodeId size() const { return static_cast<NodeId>(global_node.size()); }
  ArcId arcs() const { return static_cast<ArcId>(arc_source.size()); }
};

// Iterative Tarjan SCC; components are emitted in deterministic order.
std::vector<std::vector<NodeId>> strongly_connected_components(
    const ArcListGraph& graph) {
  const NodeId n = graph.node_count;
  std::vector<ArcId> first(n + 1, 0);
  for (ArcId a = 0; a < graph.arc_count(); ++a) ++first[graph.source[a] + 1];
  for (NodeId v = 0; v < n; ++v) first[v + 1] += first[v];
  std::vector<ArcId> out(graph.arc_count());
  {
    std::vector<ArcId> cursor(first.begin(), first.end() - 1);
    for (ArcId a = 0; a < graph.arc_count(); ++a) {
      out[cursor[graph.source[a]]++] = a;
    }
  }

  std::vector<int> index(n, -1), lowlink(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<NodeId> stack;
  std::vector<std::vector<NodeId>> components;
  int next_index = 0;

  struct Frame {
    NodeId node;
    ArcId arc_pos;
  };
  std::vector<Frame> call_stack;

  for (NodeId start = 0; start < n; ++start) {
    if (index[start] >= 0) continue;
    call_stack.push_back({start, first[start]});
    index[start] = lowlink[start] = next_index++;
    stack.push_back(start);
    on_stack[start] = 1;
    while (!call_stack.empty()) {
      Frame& frame = call_stack.back();
      const NodeId v = frame.node;
      if (frame.arc_pos < first[v + 1]) {
        const NodeId w = graph.target[out[frame.arc_pos++]];
        if (index[w] < 0) {
          index[w] = lowlink[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          call_stack.push_back({w, first[w]});
        } else if (on_stack[w]) {
          lowlink[v] = std::min(lowlink[v], index[w]);
        }
      } else {
        call_stack.pop_back();
        if (!call_stack.empty()) {
          const NodeId parent = call_stack.back().node;
          lowlink[parent] = std::min(lowlink[parent], lowlink[v]);
        }
        if (lowlink[v] == index[v]) {
          std::vector<NodeId> component;
          NodeId w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            component.push_back(w);
          } while (w != v);
          std::sort(component.begin(), component.end());
          components.push_back(std::move(component));
        }
      }
    }
  }
  std::sort(components.begin(), components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return components;
}

// Splits the graph into components in one pass over nodes and arcs.
std::vector<Component> split_components(const ArcListGraph& graph) {
  const auto node_groups = strongly_connected_components(graph);
  std::vector<int> comp_of(graph.node_count, -1);
  std::vector<NodeId> local_id(graph.node_count, -1);
  std::vector<Component> comps(node_groups.size());
  for (std::size_t c = 0; c < node_groups.size(); ++c) {
    comps[c].global_node = node_groups[c];
    for (NodeId i = 0; i < static_cast<NodeId>(node_groups[c].size()); ++i) {
      comp_of[node_groups[c][i]] = static_cast<int>(c);
      local_id[node_groups[c][i]] = i;
    }
  }
  for (ArcId a = 0; a < graph.arc_count(); ++a) {
    const NodeId u = graph.source[a], v = graph.target[a];
    if (comp_of[u] != comp_of[v]) continue;
    Component& comp = comps[comp_of[u]];
    comp.arc_source.push_back(local_id[u]);
    comp.arc_target.push_back(local_id[v]);
    comp.arc_cost.push_back(graph.cost[a]);
    comp.global_arc.push_back(a);
  }
  for (Component& comp : comps) {
    const NodeId s = comp.size();
    comp.first_out.assign(s + 1, 0);
    for (ArcId a = 0; a < comp.arcs(); ++a) {
      ++comp.first_out[comp.arc_source[a] + 1];
    }
    for (NodeId v = 0; v < s; ++v) comp.first_out[v + 1] += comp.first_out[v];
    comp.out_arcs.resize(comp.arcs());
    std::vector<ArcId> cursor(comp.first_out.begin(), comp.first_out.end() - 1);
    for (ArcId a = 0; a < comp.arcs(); ++a) {
      comp.out_arcs[cursor[comp.arc_source[a]]++] = a;
    }
  }
  return comps;
}

MinMeanCycle make_result(const Component& comp, std::vector<ArcId> local_arcs) {
  MinMeanCycle cycle;
  cycle.mean.total_cost = 0;
  cycle.mean.length = static_cast<Value>(local_arcs.size());
  cycle.arcs.reserve(local_arcs.size());
  for (ArcId a : local_arcs) {
    cycle.mean.total_cost += comp.arc_cost[a];
    cycle.arcs.push_back(comp.global_arc[a]);
  }
  return cycle;
}

// Level table shared by Karp and Hartmann-Orlin: row k holds the minimum
// cost of a walk with exactly k arcs from the source (local node 0),
// together with the arc that achieved it.
struct LevelTable {
  NodeId s = 0;
  std::vector<Value> dist;    // (s+1) x s, row-major
  std::vector<ArcId> parent;  // arc into the node at this level

  Value& d(NodeId level, NodeId v) { return dist[level * s + v]; }
  ArcId& p(NodeId level, NodeId v) { return parent[level * s + v]; }
  Value d(NodeId level, NodeId v) const { return dist[level * s + v]; }
  ArcId p(NodeId level, NodeId v) const { return parent[level * s + v]; }
};

void compute_level(const Component& comp, LevelTable& table, NodeId k) {
  const NodeId s = comp.size();
  for (NodeId v = 0; v < s; ++v) {
    table.d(k, v) = kInf;
    table.p(k, v) = kInvalidArc;
  }
  for (ArcId a = 0; a < comp.arcs(); ++a) {
    const Value du = table.d(k - 1, comp.arc_source[a]);
    if (du == kInf) continue;
    const Value cand = du + comp.arc_cost[a];
    const NodeId v = comp.arc_target[a];
    if (cand < table.d(k, v)) {
      table.d(k, v) = cand;
      table.p(k, v) = a;
    }
  }
}

// Reconstructs the walk ending at (level, v); walk_nodes[k] is the node at
// level k for k in [0, level].
std::vector<NodeId> reconstruct_walk(const Component& comp,
                                     const LevelTable& table, NodeId level,
                                     NodeId v) {
  std::vector<NodeId> walk(level + 1);
  NodeId node = v;
  for (NodeId k = level; k > 0; --k) {
    walk[k] = node;
    node = comp.arc_source[table.p(k, node)];
  }
  walk[0] = node;
  return walk;
}

// Karp's evaluation over a completed level table: the min over nodes of the
// max over levels of (D_s(v) - D_k(v)) / (s - k), plus cycle extraction from
// the minimizing walk (every cycle on that walk attains the minimum mean).
std::optional<MinMeanCycle> karp_evaluate(const Component& comp,
                                          const LevelTable& table) {
  const NodeId s = comp.size();
  NodeId best_node = kInvalidNode;
  Value best_num = 0, best_den = 1;
  for (NodeId v = 0; v < s; ++v) {
    if (table.d(s, v) == kInf) continue;
    Value num = 0, den = 1;
    bool have = false;
    for (NodeId k = 0; k < s; ++k) {
      if (table.d(k, v) == kInf) continue;
      const Value cand_num = table.d(s, v) - table.d(k, v);
      const Value cand_den = s - k;
      if (!have || static_cast<Wide>(cand_num) * den >
                       static_cast<Wide>(num) * cand_den) {
        num = cand_num;
        den = cand_den;
        have = true;
      }
    }
    if (!have) continue;
    if (best_node == kInvalidNode ||
        static_cast<Wide>(num) * best_den < static_cast<Wide>(best_num) * den) {
      best_node = v;
      best_num = num;
      best_den = den;
    }
  }
  if (best_node == kInvalidNode) return std::nullopt;

  const std::vector<NodeId> walk = reconstruct_walk(comp, table, s, best_node);
  std::vector<NodeId> seen_at(s, -1);
  NodeId lo = -1, hi = -1;
  for (NodeId k = 0; k <= s; ++k) {
    if (seen_at[walk[k]] >= 0) {
      lo = seen_at[walk[k]];
      hi = k;
      break;
    }
    seen_at[walk[k]] = k;
  }
  assert(lo >= 0);
  std::vector<ArcId> arcs;
  for (NodeId k = lo + 1; k <= hi; ++k) arcs.push_back(table.p(k, walk[k]));
  return make_result(comp, arcs);
}

std::optional<MinMeanCycle> karp(const Component& comp) {
  const NodeId s = comp.size();
  LevelTable table;
  table.s = s;
  table.dist.assign(static_cast<std::size_t>(s + 1) * s, kInf);
  table.parent.assign(static_cast<std::size_t>(s + 1) * s, kInvalidArc);
  table.d(0, 0) = 0;
  for (NodeId k = 1; k <= s; ++k) compute_level(comp, table, k);
  return karp_evaluate(comp, table);
}

// Hartmann-Orlin: Karp's level computation with early termination. An
// incumbent cycle is harvested from the walks at geometrically spaced
// checkpoints; the run stops as soon as one full level brings no improvement
// to the distance profile shifted by the incumbent mean (a Bellman-Ford
// fixpoint certificate that no cycle beats the incumbent).
class HartmannOrlin {
 public:
  explicit HartmannOrlin(const Component& comp) : comp_(comp) {}

  std::optional<MinMeanCycle> run() {
    const NodeId s = comp_.size();
    table_.s = s;
    table_.dist.assign(static_cast<std::size_t>(s + 1) * s, kInf);
    table_.parent.assign(static_cast<std::size_t>(s + 1) * s, kInvalidArc);
    table_.d(0, 0) = 0;
    profile_.assign(s, kWideInf);

    NodeId next_check = 1;
    for (NodeId k = 1; k <= s; ++k) {
      compute_level(comp_, table_, k);
      if (have_incumbent_) {
        bool improved = false;
        for (NodeId v = 0; v < s; ++v) {
          if (table_.d(k, v) == kInf) continue;
          const Wide shifted = shift(table_.d(k, v), k);
          if (shifted < profile_[v]) {
            profile_[v] = shifted;
            improved = true;
          }
        }
        if (!improved) return make_result(comp_, incumbent_arcs_);
      }
      if (k == next_check || k == s) {
        harvest(k);
        next_check = std::min<NodeId>(2 * next_check, s);
      }
    }
    // No early exit: fall back to the full Karp evaluation.
    return karp_evaluate(comp_, table_);
  }

 private:
  Wide shift(Value dist, NodeId level) const {
    return static_cast<Wide>(dist) * incumbent_len_ -
           static_cast<Wide>(level) * incumbent_total_;
  }

  // Scans the walks ending at level k for cycles and updates the incumbent.
  void harvest(NodeId k) {
    const NodeId s = comp_.size();
    std::vector<NodeId> seen_at(s, -1);
    bool updated = false;
    for (NodeId v = 0; v < s; ++v) {
      if (table_.d(k, v) == kInf) continue;
      const std::vector<NodeId> walk = reconstruct_walk(comp_, table_, k, v);
      NodeId lo = -1, hi = -1;
      for (NodeId j = 0; j <= k; ++j) {
        if (seen_at[walk[j]] >= 0) {
          lo = seen_at[walk[j]];
          hi = j;
          break;
        }
        seen_at[walk[j]] = j;
      }
      for (NodeId j = 0; j <= k; ++j) seen_at[walk[j]] = -1;
      if (lo < 0) continue;
      const NodeId anchor = walk[hi];
      const Value total = table_.d(hi, anchor) - table_.d(lo, anchor);
      const Value length = hi - lo;
      if (!have_incumbent_ ||
          static_cast<Wide>(total) * incumbent_len_ <
              static_cast<Wide>(incumbent_total_) * length) {
        incumbent_total_ = total;
        incumbent_len_ = length;
        incumbent_arcs_.clear();
        for (NodeId j = lo + 1; j <= hi; ++j) {
          incumbent_arcs_.push_back(table_.p(j, walk[j]));
        }
        have_incumbent_ = true;
        updated = true;
      }
    }
    if (updated) {
      // Rebuild the shifted profile for the new incumbent mean.
      const NodeId s = comp_.size();
      for (NodeId v = 0; v < s; ++v) profile_[v] = kWideInf;
      for (NodeId j = 0; j <= k; ++j) {
        for (NodeId v = 0; v < s; ++v) {
          if (table_.d(j, v) == kInf) continue;
          profile_[v] = std::min(profile_[v], shift(table_.d(j, v), j));
        }
      }
    }
  }

  const Component& comp_;
  LevelTable table_;
  std::vector<Wide> profile_;
  bool have_incumbent_ = false;
  Value incumbent_total_ = 0;
  Value incumbent_len_ = 1;
  std::vector<ArcId> incumbent_arcs_;
};

// Howard's policy iteration. Each round finds the best cycle of the current
// policy graph, evaluates node values against weights shifted by that
// cycle's mean, and greedily improves the policy; it stops when no arc
// improves, which certifies the cycle mean as optimal.
class Howard {
 public:
  Howard(const Component& comp, std::int64_t iteration_limit)
      : comp_(comp), limit_(iteration_limit) {}

  // nullopt means the iteration limit was hit before convergence.
  std::optional<std::optional<MinMeanCycle>> run() {
    const NodeId s = comp_.size();
    policy_.assign(s, kInvalidArc);
    for (NodeId v = 0; v < s; ++v) {
      for (ArcId i = comp_.first_out[v]; i < comp_.first_out[v + 1]; ++i) {
        const ArcId a = comp_.out_arcs[i];
        if (policy_[v] == kInvalidArc ||
            comp_.arc_cost[a] < comp_.arc_cost[policy_[v]]) {
          policy_[v] = a;
        }
      }
      if (policy_[v] == kInvalidArc) {
        // A strongly connected component with arcs has no sink; a node
        // without out-arcs can only occur in a trivial component.
        return std::optional<std::optional<MinMeanCycle>>(std::nullopt);
      }
    }

    value_.assign(s, kWideInf);
    std::int64_t rounds = 0;
    while (true) {
      if (limit_ > 0 && rounds >= limit_) return std::nullopt;
      ++rounds;
      find_policy_cycle();
      evaluate();
      if (!improve()) break;
    }
    std::vector<ArcId> arcs;
    NodeId v = cycle_node_;
    do {
      arcs.push_back(policy_[v]);
      v = comp_.arc_target[policy_[v]];
    } while (v != cycle_node_);
    return std::optional<std::optional<MinMeanCycle>>(make_result(comp_, arcs));
  }

 private:
  void find_policy_cycle() {
    const NodeId s = comp_.size();
    std::vector<NodeId> mark(s, -1);
    cycle_total_ = 0;
    cycle_len_ = 0;
    cycle_node_ = kInvalidNode;
    for (NodeId start = 0; start < s; ++start) {
      if (mark[start] >= 0) continue;
      NodeId v = start;
      while (mark[v] < 0) {
        mark[v] = start;
        v = comp_.arc_target[policy_[v]];
      }
      if (mark[v] != start) continue;  // walked into an already-explored tail
      Value total = 0, len = 0;
      NodeId w = v;
      do {
        total += comp_.arc_cost[policy_[w]];
        ++len;
        w = comp_.arc_target[policy_[w]];
      } while (w != v);
      if (cycle_node_ == kInvalidNode ||
          static_cast<Wide>(total) * cycle_len_ <
              static_cast<Wide>(cycle_total_) * len) {
        cycle_total_ = total;
        cycle_len_ = len;
        cycle_node_ = v;
      }
    }
  }

  Wide shifted(ArcId a) const {
    return static_cast<Wide>(comp_.arc_cost[a]) * cycle_len_ - cycle_total_;
  }

  // Values via reverse BFS through the policy graph from the chosen cycle.
  // Nodes draining into other policy cycles keep the infinite sentinel and
  // are captured by later improvement rounds.
  void evaluate() {
    const NodeId s = comp_.size();
    std::vector<std::vector<NodeId>> reverse_policy(s);
    for (NodeId v = 0; v < s; ++v) {
      reverse_policy[comp_.arc_target[policy_[v]]].push_back(v);
    }
    for (NodeId v = 0; v < s; ++v) value_[v] = kWideInf;
    std::vector<NodeId> queue;
    queue.push_back(cycle_node_);
    value_[cycle_node_] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const NodeId v = queue[i];
      for (NodeId u : reverse_policy[v]) {
        if (value_[u] != kWideInf) continue;
        value_[u] = value_[v] + shifted(policy_[u]);
        queue.push_back(u);
      }
    }
  }

  bool improve() {
    bool improved = false;
    for (ArcId a = 0; a < comp_.arcs(); ++a) {
      const NodeId u = comp_.arc_source[a], v = comp_.arc_target[a];
      if (value_[v] == kWideInf) continue;
      const Wide cand = value_[v] + shifted(a);
      if (cand < value_[u]) {
        value_[u] = cand;
        policy_[u] = a;
        improved = true;
      }
    }
    return improved;
  }

  const Component& comp_;
  std::int64_t limit_;
  std::vector<ArcId> policy_;
  std::vector<Wide> value_;
  Value cycle_total_ = 0;
  Value cycle_len_ = 0;
  NodeId cycle_node_ = kInvalidNode;
};

std::optional<MinMeanCycle> solve_component(const Component& comp,
                                            MinMeanMethod method,
                                            std::int64_t howard_limit) {
  switch (method) {
    case MinMeanMethod::kKarp:
      return karp(comp);
    case MinMeanMethod::kHartmannOrlin:
      return HartmannOrlin(comp).run();
    case MinMeanMethod::kHoward: {
      auto result = Howard(comp, howard_limit).run();
      if (!result.has_value()) {
        // Limit hit on a plain Howard run: fall back to the exact method so
        // the contract (same MeanValue from every method) still holds.
        return HartmannOrlin(comp).run();
      }
      return *result;
    }
    case MinMeanMethod::kCombined: {
      const std::int64_t limit =
          howard_limit > 0 ? howard_limit : comp.size();
      auto result = Howard(comp, limit).run();
      if (!result.has_value()) return HartmannOrlin(comp).run();
      return *result;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<MinMeanCycle> min_mean_cycle(const ArcListGraph& graph,
                                           MinMeanMethod method,
                                           std::int64_t howard_limit) {
  std::optional<MinMeanCycle> best;
  for (const Component& comp : split_components(graph)) {
    if (comp.arcs() == 0) continue;
    auto result = solve_component(comp, method, howard_limit);
    if (result.has_value() &&
        (!best.has_value() || mean_less(result->mean, best->mean))) {
      best = std::move(result);
    }
  }
  return best;
}

}  // namespace mcf
