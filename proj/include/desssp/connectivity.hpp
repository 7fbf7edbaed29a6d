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

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "desssp/errors.hpp"
#include "desssp/euler_tour_forest.hpp"
#include "desssp/graph.hpp"

namespace desssp {

using ComponentId = std::uint64_t;

/// Outcome of removing an edge from a dynamic connectivity structure.
struct SplitReport {
  bool split = false;
  /// Side with at most half the vertices of the old component. On a tie, the
  /// side that does not contain the old component's lowest vertex.
  std::vector<VertexId> smaller_side;
  ComponentId surviving_component = 0;
};

/// Picks the reported side of a split from the sizes and minimum vertices of
/// the two halves: true when the `a` half is the one to report.
inline bool report_first_side(std::size_t size_a, VertexId min_a, std::size_t size_b,
                              VertexId min_b) {
  if (size_a != size_b) return size_a < size_b;
  return min_a > min_b;
}

/// Deterministic fully dynamic connectivity with amortized O(log^2 n)
/// updates (Holm, de Lichtenberg and Thorup).
///
/// Each edge has a level in [0, log2 n]. Forest F_i holds the tree edges of
/// level >= i, kept as Euler tours, and every tree of F_i has at most n/2^i
/// vertices. When a tree edge goes away, the smaller half at each level from
/// the edge's level downwards pays for the search: its level-i tree edges and
/// its fruitless level-i non-tree edges move up one level.
class HdtConnectivity {
 public:
  struct Stats {
    std::uint64_t inserts = 0;
    std::uint64_t deletes = 0;
    std::uint64_t level_raises = 0;
    std::uint64_t replacement_scans = 0;
    std::uint64_t splits = 0;
  };

  explicit HdtConnectivity(std::size_t n)
      : n_(n), max_level_(n <= 1 ? 0 : std::bit_width(n) - 1) {
    for (int i = 0; i <= max_level_; ++i) {
      forests_.emplace_back(n, 0x5eedULL + static_cast<std::uint64_t>(i));
      nontree_.emplace_back(n);
    }
  }

  std::size_t num_vertices() const { return n_; }
  int max_level() const { return max_level_; }

  void insert(VertexId u, VertexId v) {
    EdgeKey key = checked_key(u, v);
    if (index_.contains(key.packed())) {
      throw DuplicateEdge("edge " + key.str() + " already in connectivity structure");
    }
    ++stats_.inserts;
    std::uint32_t id = allocate_edge(key);
    Edge& e = edges_[id];
    if (!forests_[0].connected(key.u, key.v)) {
      e.tree = true;
      e.arcs.push_back(forests_[0].link(key.u, key.v, id));
      forests_[0].set_mark(e.arcs[0].forward, true);
    } else {
      add_nontree(id, 0);
    }
  }

  SplitReport erase(VertexId u, VertexId v) {
    EdgeKey key = checked_key(u, v);
    auto it = index_.find(key.packed());
    if (it == index_.end()) {
      throw EdgeNotFound("edge " + key.str() + " not in connectivity structure");
    }
    ++stats_.deletes;
    std::uint32_t id = it->second;
    index_.erase(it);
    SplitReport report;
    if (!edges_[id].tree) {
      remove_nontree(id);
      free_edge(id);
      report.surviving_component = component_id(key.u);
      return report;
    }
    const int lvl = edges_[id].level;
    forests_[lvl].set_mark(edges_[id].arcs[lvl].forward, false);
    for (int i = 0; i <= lvl; ++i) forests_[i].cut(edges_[id].arcs[i]);
    free_edge(id);

    for (int i = lvl; i >= 0; --i) {
      if (find_replacement(key.u, key.v, i)) {
        report.surviving_component = component_id(key.u);
        return report;
      }
    }

    ++stats_.splits;
    auto& f0 = forests_[0];
    const std::size_t su = f0.tree_size(key.u);
    const std::size_t sv = f0.tree_size(key.v);
    const bool take_u = report_first_side(su, f0.tree_min(key.u), sv, f0.tree_min(key.v));
    const VertexId small = take_u ? key.u : key.v;
    const VertexId large = take_u ? key.v : key.u;
    report.split = true;
    report.smaller_side = f0.vertices(f0.tree_of(small));
    std::sort(report.smaller_side.begin(), report.smaller_side.end());
    report.surviving_component = component_id(large);
    return report;
  }

  bool contains(VertexId u, VertexId v) const {
    if (u == v || u >= n_ || v >= n_) return false;
    return index_.contains(EdgeKey::of(u, v).packed());
  }

  bool connected(VertexId u, VertexId v) const { return forests_[0].connected(u, v); }
  std::size_t component_size(VertexId u) const { return forests_[0].tree_size(u); }
  ComponentId component_id(VertexId u) const {
    return static_cast<ComponentId>(forests_[0].tree_of(u));
  }

  const Stats& stats() const { return stats_; }

  /// Total elementary tree operations across all levels.
  std::uint64_t work() const {
    std::uint64_t w = scan_work_;
    for (const auto& f : forests_) w += f.work();
    return w;
  }

  /// Structural audit: forests nest (F_i subset of F_{i-1}), every tree of
  /// F_i has at most n/2^i vertices, and the tour trees are well formed.
  bool audit() const {
    for (int i = 0; i <= max_level_; ++i) {
      if (!forests_[i].audit()) return false;
      for (VertexId v = 0; v < n_; ++v) {
        if ((forests_[i].tree_size(v) << i) > n_) return false;
        if (i > 0 && forests_[i].connected(v, 0) && !forests_[i - 1].connected(v, 0)) return false;
      }
    }
    for (const auto& [packed, id] : index_) {
      const Edge& e = edges_[id];
      if (e.tree && static_cast<int>(e.arcs.size()) != e.level + 1) return false;
      if (!forests_[e.level].connected(e.key.u, e.key.v)) return false;
    }
    return true;
  }

 private:
  struct Edge {
    EdgeKey key;
    int level = 0;
    bool tree = false;
    std::vector<EulerTourForest::ArcPair> arcs;  // one per level 0..level
    std::uint32_t pos_u = 0;
    std::uint32_t pos_v = 0;
  };

  EdgeKey checked_key(VertexId u, VertexId v) const {
    if (u >= n_ || v >= n_) throw InvalidArgument("vertex out of range");
    return EdgeKey::of(u, v);
  }

  std::uint32_t allocate_edge(EdgeKey key) {
    std::uint32_t id;
    if (!free_edges_.empty()) {
      id = free_edges_.back();
      free_edges_.pop_back();
      edges_[id] = Edge{};
    } else {
      id = static_cast<std::uint32_t>(edges_.size());
      edges_.emplace_back();
    }
    edges_[id].key = key;
    index_.emplace(key.packed(), id);
    return id;
  }

  void free_edge(std::uint32_t id) {
    edges_[id] = Edge{};
    free_edges_.push_back(id);
  }

  void add_nontree(std::uint32_t id, int lvl) {
    Edge& e = edges_[id];
    e.tree = false;
    e.level = lvl;
    auto& lu = nontree_[lvl][e.key.u];
    auto& lv = nontree_[lvl][e.key.v];
    e.pos_u = static_cast<std::uint32_t>(lu.size());
    lu.push_back(id);
    e.pos_v = static_cast<std::uint32_t>(lv.size());
    lv.push_back(id);
    if (lu.size() == 1) forests_[lvl].set_mark(forests_[lvl].vertex_node(e.key.u), true);
    if (lv.size() == 1) forests_[lvl].set_mark(forests_[lvl].vertex_node(e.key.v), true);
  }

  void remove_nontree(std::uint32_t id) {
    Edge& e = edges_[id];
    detach_nontree(e.level, e.key.u, e.pos_u);
    detach_nontree(e.level, e.key.v, e.pos_v);
  }

  void detach_nontree(int lvl, VertexId x, std::uint32_t pos) {
    auto& list = nontree_[lvl][x];
    std::uint32_t moved = list.back();
    list[pos] = moved;
    list.pop_back();
    if (pos < list.size()) {
      Edge& m = edges_[moved];
      (m.key.u == x ? m.pos_u : m.pos_v) = pos;
    }
    if (list.empty()) forests_[lvl].set_mark(forests_[lvl].vertex_node(x), false);
  }

  void make_tree_edge(std::uint32_t id, int lvl) {
    Edge& e = edges_[id];
    e.tree = true;
    e.level = lvl;
    e.arcs.clear();
    for (int i = 0; i <= lvl; ++i) e.arcs.push_back(forests_[i].link(e.key.u, e.key.v, id));
    forests_[lvl].set_mark(e.arcs[lvl].forward, true);
  }

  /// Searches level i for an edge reconnecting the trees of u and v in F_i,
  /// raising levels inside the smaller tree as it goes.
  bool find_replacement(VertexId u, VertexId v, int i) {
    EulerTourForest& f = forests_[i];
    const VertexId small = f.tree_size(u) <= f.tree_size(v) ? u : v;

    // Level-i tree edges of the smaller tree move to level i + 1.
    for (auto node : f.marked_nodes(f.tree_of(small))) {
      if (f.is_vertex_node(node)) continue;
      std::uint32_t id = f.payload(node);
      Edge& e = edges_[id];
      f.set_mark(e.arcs[i].forward, false);
      e.level = i + 1;
      e.arcs.push_back(forests_[i + 1].link(e.key.u, e.key.v, id));
      forests_[i + 1].set_mark(e.arcs[i + 1].forward, true);
      ++stats_.level_raises;
    }

    const auto small_root = f.tree_of(small);
    for (auto node : f.marked_nodes(small_root)) {
      if (!f.is_vertex_node(node)) continue;
      const VertexId x = f.node_vertex(node);
      auto& list = nontree_[i][x];
      while (!list.empty()) {
        std::uint32_t id = list.back();
        ++scan_work_;
        ++stats_.replacement_scans;
        const Edge& e = edges_[id];
        const VertexId y = e.key.other(x);
        remove_nontree(id);
        if (f.tree_of(y) == small_root) {
          add_nontree(id, i + 1);
          ++stats_.level_raises;
        } else {
          make_tree_edge(id, i);
          return true;
        }
      }
    }
    return false;
  }

  std::size_t n_;
  int max_level_;
  std::vector<EulerTourForest> forests_;
  std::vector<std::vector<std::vector<std::uint32_t>>> nontree_;  // [level][vertex]
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> free_edges_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
  Stats stats_;
  std::uint64_t scan_work_ = 0;
};

/// Recompute-from-scratch connectivity with the same interface as
/// HdtConnectivity; used as a differential oracle.
class NaiveConnectivity {
 public:
  explicit NaiveConnectivity(std::size_t n) : adj_(n) {}

  std::size_t num_vertices() const { return adj_.size(); }

  void insert(VertexId u, VertexId v) {
    EdgeKey key = checked_key(u, v);
    if (!adj_[key.u].insert(key.v).second) {
      throw DuplicateEdge("edge " + key.str() + " already in connectivity structure");
    }
    adj_[key.v].insert(key.u);
  }

  SplitReport erase(VertexId u, VertexId v) {
    EdgeKey key = checked_key(u, v);
    if (adj_[key.u].erase(key.v) == 0) {
      throw EdgeNotFound("edge " + key.str() + " not in connectivity structure");
    }
    adj_[key.v].erase(key.u);
    SplitReport report;
    auto side_u = reach(key.u);
    if (std::binary_search(side_u.begin(), side_u.end(), key.v)) {
      report.surviving_component = component_id(key.u);
      return report;
    }
    auto side_v = reach(key.v);
    const bool take_u = report_first_side(side_u.size(), side_u.front(), side_v.size(), side_v.front());
    report.split = true;
    report.smaller_side = take_u ? side_u : side_v;
    report.surviving_component = take_u ? side_v.front() : side_u.front();
    return report;
  }

  bool contains(VertexId u, VertexId v) const {
    if (u == v || u >= adj_.size() || v >= adj_.size()) return false;
    return adj_[u].contains(v);
  }

  bool connected(VertexId u, VertexId v) const {
    auto side = reach(u);
    return std::binary_search(side.begin(), side.end(), v);
  }
  std::size_t component_size(VertexId u) const { return reach(u).size(); }
  /// Smallest vertex of the component.
  ComponentId component_id(VertexId u) const { return reach(u).front(); }

  std::uint64_t work() const { return 0; }

  /// Sorted vertex set of u's component.
  std::vector<VertexId> reach(VertexId u) const {
    std::vector<char> seen(adj_.size(), 0);
    std::vector<VertexId> out{u};
    seen[u] = 1;
    for (std::size_t head = 0; head < out.size(); ++head) {
      for (VertexId y : adj_[out[head]]) {
        if (!seen[y]) {
          seen[y] = 1;
          out.push_back(y);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  EdgeKey checked_key(VertexId u, VertexId v) const {
    if (u >= adj_.size() || v >= adj_.size()) throw InvalidArgument("vertex out of range");
    return EdgeKey::of(u, v);
  }

  std::vector<std::unordered_set<VertexId>> adj_;
};

}  // namespace desssp
