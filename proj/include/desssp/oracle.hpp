// Copyright 2026 The desssp Authors.
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

// Exact from-scratch reference computations. Nothing in here is incremental;
// every function recomputes its answer from the current edge set.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <queue>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "desssp/graph.hpp"
#include "desssp/rational.hpp"
#include "desssp/threshold_graph.hpp"

namespace desssp::oracle {

using DistanceVector = std::vector<double>;

inline DistanceVector dijkstra(std::size_t n, std::span<const RealWeightedEdge> edges,
                               VertexId source) {
  std::vector<std::vector<std::pair<VertexId, double>>> adj(n);
  for (const auto& e : edges) {
    adj[e.u].emplace_back(e.v, e.w);
    adj[e.v].emplace_back(e.u, e.w);
  }
  DistanceVector dist(n, kInfinity);
  using Item = std::pair<double, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[source] = 0.0;
  heap.emplace(0.0, source);
  while (!heap.empty()) {
    auto [d, x] = heap.top();
    heap.pop();
    if (d > dist[x]) continue;
    for (auto [y, w] : adj[x]) {
      if (d + w < dist[y]) {
        dist[y] = d + w;
        heap.emplace(dist[y], y);
      }
    }
  }
  return dist;
}

inline std::vector<RealWeightedEdge> edge_list(const DynamicGraph& g) {
  std::vector<RealWeightedEdge> edges;
  edges.reserve(g.num_edges());
  g.for_each_edge([&](EdgeId, const GraphEdge& e) { edges.push_back({e.key.u, e.key.v, e.weight}); });
  return edges;
}

inline DistanceVector dijkstra(const DynamicGraph& g, VertexId source) {
  auto edges = edge_list(g);
  return dijkstra(g.num_vertices(), edges, source);
}

inline DistanceVector dijkstra(const ThresholdGraph& gt, VertexId source) {
  auto edges = gt.edges();
  return dijkstra(gt.num_vertices(), edges, source);
}

/// Everything the threshold construction derives from G, by direct enumeration.
struct FreshThreshold {
  std::vector<int> cutoff;
  std::set<EdgeKey> heavy;
  ThresholdGraph graph;
};

/// Cut-off of v: the largest i >= 0 whose edges of level <= i number at
/// least tau * 2^i, counted edge by edge. Past v's top level the count is
/// the degree, so i keeps going until tau * 2^i passes it.
inline int cutoff_by_enumeration(const DynamicGraph& g, VertexId v, const Rational& tau,
                                 CutoffSentinel sentinel) {
  int best = sentinel == CutoffSentinel::kMinusOne ? -1 : 0;
  for (int i = 0; i < 62; ++i) {
    std::int64_t count = 0;
    for (EdgeId id : g.incident(v)) {
      if (level(g.edge(id).weight) <= i) ++count;
    }
    // count >= tau * 2^i, exactly
    if (int128{count} * tau.den() >= (int128{tau.num()} << i)) best = i;
  }
  return best;
}

inline FreshThreshold build_gtau_fresh(const DynamicGraph& g, const Rational& tau,
                                       CutoffSentinel sentinel = CutoffSentinel::kMinusOne) {
  if (tau <= Rational(0)) throw InvalidArgument("threshold must be positive");
  const std::size_t n = g.num_vertices();
  FreshThreshold out;
  out.cutoff.resize(n);
  for (VertexId v = 0; v < n; ++v) out.cutoff[v] = cutoff_by_enumeration(g, v, tau, sentinel);

  std::vector<std::vector<VertexId>> heavy_adj(n);
  out.graph.n = n;
  g.for_each_edge([&](EdgeId, const GraphEdge& e) {
    int lvl = level(e.weight);
    if (lvl <= out.cutoff[e.key.u] || lvl <= out.cutoff[e.key.v]) {
      out.heavy.insert(e.key);
      heavy_adj[e.key.u].push_back(e.key.v);
      heavy_adj[e.key.v].push_back(e.key.u);
    } else {
      out.graph.light.emplace(e.key, e.weight);
    }
  });

  out.graph.component_of.assign(n, 0);
  std::vector<bool> seen(n, false);
  std::uint32_t next = 0;
  for (VertexId root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<VertexId> stack{root};
    seen[root] = true;
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      out.graph.component_of[x] = next;
      for (VertexId y : heavy_adj[x]) {
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  out.graph.component_slots = next;
  return out;
}

struct SandwichViolation {
  VertexId s = 0;
  VertexId t = 0;
  double dist = 0.0;
  double dist_tau = 0.0;
  std::string which;
};

struct SandwichReport {
  std::size_t pairs_checked = 0;
  std::vector<SandwichViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks dist_tau(s,t) <= dist(s,t) < dist_tau(s,t) + 14n/tau for each pair,
/// with exact arithmetic on the additive gap.
inline SandwichReport check_sandwich(const DynamicGraph& g, const ThresholdGraph& gtau,
                                     const Rational& tau,
                                     std::span<const std::pair<VertexId, VertexId>> pairs) {
  SandwichReport report;
  const Rational gap = Rational(14 * static_cast<std::int64_t>(g.num_vertices())) / tau;
  VertexId last_source = kNoVertex;
  DistanceVector d;
  DistanceVector dt;
  for (auto [s, t] : pairs) {
    if (s != last_source) {
      d = dijkstra(g, s);
      dt = dijkstra(gtau, s);
      last_source = s;
    }
    ++report.pairs_checked;
    const double dist = d[t];
    const double dist_tau = dt[t];
    if (dist == kInfinity || dist_tau == kInfinity) {
      if (dist != dist_tau) report.violations.push_back({s, t, dist, dist_tau, "reachability"});
      continue;
    }
    if (dist_tau > dist) report.violations.push_back({s, t, dist, dist_tau, "lower"});
    if (!(exact_rational(dist) < exact_rational(dist_tau) + gap)) {
      report.violations.push_back({s, t, dist, dist_tau, "upper"});
    }
  }
  return report;
}

}  // namespace desssp::oracle
