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

#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <queue>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "desssp/errors.hpp"
#include "desssp/graph.hpp"

namespace desssp {

using Label = std::int64_t;
inline constexpr Label kUnreachable = std::numeric_limits<Label>::max();

/// min(x, cap) with kUnreachable absorbing.
inline Label saturating_add(Label a, Label b) {
  if (a == kUnreachable || b == kUnreachable) return kUnreachable;
  if (a > kUnreachable - b) return kUnreachable;
  return a + b;
}

/// Exact shortest distances, capped at `depth`, for an integer-weighted graph.
inline std::vector<Label> bounded_dijkstra(std::size_t n, std::span<const WeightedEdge> edges,
                                           VertexId source, Label depth) {
  std::vector<std::vector<std::pair<VertexId, Label>>> adj(n);
  for (const auto& e : edges) {
    adj[e.u].emplace_back(e.v, e.w);
    adj[e.v].emplace_back(e.u, e.w);
  }
  std::vector<Label> dist(n, kUnreachable);
  using Item = std::pair<Label, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[source] = 0;
  heap.emplace(0, source);
  while (!heap.empty()) {
    auto [d, x] = heap.top();
    heap.pop();
    if (d > dist[x]) continue;
    for (auto [y, w] : adj[x]) {
      Label nd = d + w;
      if (nd <= depth && nd < dist[y]) {
        dist[y] = nd;
        heap.emplace(nd, y);
      }
    }
  }
  return dist;
}

/// Classic Even-Shiloach tree: exact distances up to a depth bound under
/// edge deletions and weight increases, integer weights only.
///
/// Every vertex v keeps a scan position into its adjacency list. Within one
/// label value, neighbors before the position are known not to support v, so
/// between two increases of delta(v) each incident edge is looked at O(1)
/// times. An increase jumps straight to the smallest candidate label seen in
/// the full rescan.
class EsTree {
 public:
  struct Stats {
    std::vector<std::uint64_t> label_increases;  // per vertex
    std::uint64_t edge_touches = 0;
  };

  EsTree(std::size_t n, std::span<const WeightedEdge> edges, VertexId source, Label depth)
      : source_(source),
        depth_(depth),
        label_(n, kUnreachable),
        parent_(n, kNoEdge),
        scan_(n, 0),
        adj_(n),
        queued_(n, 0) {
    if (depth < 1) throw InvalidArgument("depth bound must be >= 1");
    if (source >= n) throw InvalidArgument("source out of range");
    stats_.label_increases.assign(n, 0);
    for (const auto& e : edges) add_edge(e);
    label_ = bounded_dijkstra(n, edges, source, depth);
    for (VertexId v = 0; v < n; ++v) {
      if (v == source_ || label_[v] == kUnreachable) continue;
      for (std::uint32_t i = 0; i < adj_[v].size(); ++i) {
        const Edge& e = edges_[adj_[v][i]];
        VertexId u = e.key.other(v);
        if (label_[u] != kUnreachable && label_[u] + e.w == label_[v]) {
          parent_[v] = adj_[v][i];
          scan_[v] = i;
          break;
        }
      }
    }
  }

  std::size_t num_vertices() const { return label_.size(); }
  VertexId source() const { return source_; }
  Label depth() const { return depth_; }

  Label label(VertexId v) const { return label_[v]; }
  /// Parent vertex in the shortest-path tree, or kNoVertex.
  VertexId parent(VertexId v) const {
    return parent_[v] == kNoEdge ? kNoVertex : edges_[parent_[v]].key.other(v);
  }

  void erase(VertexId u, VertexId v) {
    EdgeId id = require(u, v);
    Edge& e = edges_[id];
    e.alive = false;
    index_.erase(e.key.packed());
    ++stats_.edge_touches;
    for (VertexId x : {e.key.u, e.key.v}) {
      if (parent_[x] == id) {
        parent_[x] = kNoEdge;
        enqueue(x);
      }
    }
    run();
  }

  void increase_weight(VertexId u, VertexId v, Label new_w) {
    EdgeId id = require(u, v);
    Edge& e = edges_[id];
    if (new_w < e.w) throw WeightDecrease("weight of " + e.key.str() + " would decrease");
    e.w = new_w;
    ++stats_.edge_touches;
    for (VertexId x : {e.key.u, e.key.v}) {
      if (parent_[x] == id) enqueue(x);
    }
    run();
  }

  const Stats& stats() const { return stats_; }

  /// Tree and relaxation invariants; returns a description per violation.
  std::vector<std::string> check_invariants() const {
    std::vector<std::string> bad;
    if (label_[source_] != 0) bad.push_back("source label is not 0");
    for (EdgeId id = 0; id < edges_.size(); ++id) {
      const Edge& e = edges_[id];
      if (!e.alive) continue;
      for (VertexId x : {e.key.u, e.key.v}) {
        VertexId y = e.key.other(x);
        Label via = saturating_add(label_[y], e.w);
        if (via <= depth_ && label_[x] > via) {
          bad.push_back("edge " + e.key.str() + " relaxes vertex " + std::to_string(x));
        }
      }
    }
    for (VertexId v = 0; v < label_.size(); ++v) {
      if (v == source_ || label_[v] == kUnreachable) continue;
      if (parent_[v] == kNoEdge) {
        bad.push_back("vertex " + std::to_string(v) + " has no parent");
        continue;
      }
      const Edge& e = edges_[parent_[v]];
      if (!e.alive || saturating_add(label_[e.key.other(v)], e.w) != label_[v]) {
        bad.push_back("tree edge into " + std::to_string(v) + " is not tight");
      }
    }
    return bad;
  }

 private:
  struct Edge {
    EdgeKey key;
    Label w = 1;
    bool alive = true;
  };

  void add_edge(const WeightedEdge& we) {
    if (we.w < 1) throw NonIntegerWeight("weights must be positive integers");
    EdgeKey key = EdgeKey::of(we.u, we.v);
    if (index_.contains(key.packed())) throw DuplicateEdge("edge " + key.str() + " repeated");
    auto id = static_cast<EdgeId>(edges_.size());
    edges_.push_back({key, we.w, true});
    index_.emplace(key.packed(), id);
    adj_[key.u].push_back(id);
    adj_[key.v].push_back(id);
  }

  EdgeId require(VertexId u, VertexId v) const {
    auto it = index_.find(EdgeKey::of(u, v).packed());
    if (it == index_.end()) throw EdgeNotFound("edge " + EdgeKey::of(u, v).str() + " not present");
    return it->second;
  }

  void enqueue(VertexId v) {
    if (v == source_ || label_[v] == kUnreachable || queued_[v]) return;
    queued_[v] = 1;
    queue_.emplace(label_[v], v);
  }

  // Vertices leave the queue in increasing (label, vertex) order.
  void run() {
    while (!queue_.empty()) {
      auto [l, v] = *queue_.begin();
      queue_.erase(queue_.begin());
      queued_[v] = 0;
      if (reattach_at_current_label(v)) continue;
      raise(v);
    }
  }

  bool reattach_at_current_label(VertexId v) {
    auto& list = adj_[v];
    for (std::uint32_t i = scan_[v]; i < list.size(); ++i) {
      ++stats_.edge_touches;
      const Edge& e = edges_[list[i]];
      if (!e.alive) continue;
      if (saturating_add(label_[e.key.other(v)], e.w) == label_[v]) {
        scan_[v] = i;
        parent_[v] = list[i];
        return true;
      }
    }
    return false;
  }

  void raise(VertexId v) {
    Label best = kUnreachable;
    EdgeId best_edge = kNoEdge;
    for (EdgeId id : adj_[v]) {
      ++stats_.edge_touches;
      const Edge& e = edges_[id];
      if (!e.alive) continue;
      Label via = saturating_add(label_[e.key.other(v)], e.w);
      if (via < best) {
        best = via;
        best_edge = id;
      }
    }
    (void)best_edge;
    label_[v] = best > depth_ ? kUnreachable : best;
    ++stats_.label_increases[v];
    scan_[v] = 0;
    parent_[v] = kNoEdge;
    for (EdgeId id : adj_[v]) {
      ++stats_.edge_touches;
      const Edge& e = edges_[id];
      if (!e.alive) continue;
      VertexId child = e.key.other(v);
      if (parent_[child] == id) enqueue(child);
    }
    enqueue(v);
  }

  VertexId source_;
  Label depth_;
  std::vector<Label> label_;
  std::vector<EdgeId> parent_;
  std::vector<std::uint32_t> scan_;
  std::vector<std::vector<EdgeId>> adj_;
  std::vector<Edge> edges_;
  std::unordered_map<std::uint64_t, EdgeId> index_;
  std::vector<char> queued_;
  std::set<std::pair<Label, VertexId>> queue_;
  Stats stats_;
};

}  // namespace desssp
