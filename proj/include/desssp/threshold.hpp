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
#include <cstdint>
#include <map>
#include <set>
#include <unordered_map>
#include <vector>

#include "desssp/connectivity.hpp"
#include "desssp/errors.hpp"
#include "desssp/graph.hpp"
#include "desssp/rational.hpp"
#include "desssp/threshold_graph.hpp"

namespace desssp {

/// One edit of the threshold graph. Component slot c is vertex n + c.
struct GtauChange {
  enum class Kind {
    kInsertLight,    // key, weight
    kDeleteLight,    // key
    kIncreaseLight,  // key, weight (new)
    kRepoint,        // vertex moves from old_slot to new_slot
  };

  Kind kind = Kind::kInsertLight;
  EdgeKey key;
  double weight = 0.0;
  VertexId vertex = kNoVertex;
  std::uint32_t old_slot = 0;
  std::uint32_t new_slot = 0;
};

/// Keeps cut-offs, the heavy/light split and the threshold graph in step
/// with a decremental graph.
///
/// Cut-offs only fall, so an edge only ever goes from heavy to light. When
/// the heavy subgraph splits, the smaller side moves to a fresh component
/// slot and the larger side keeps the old one.
template <class Connectivity = HdtConnectivity>
class ThresholdMaintainer {
 public:
  struct Counters {
    std::uint64_t half_edge_insertions = 0;
    std::vector<std::uint64_t> light_insertions_by_level;
    std::uint64_t repointings = 0;
    std::uint64_t reclassified = 0;
  };

  ThresholdMaintainer(const DynamicGraph& g, const Rational& tau,
                      CutoffSentinel sentinel = CutoffSentinel::kMinusOne)
      : n_(g.num_vertices()),
        tau_(tau),
        floor_(sentinel == CutoffSentinel::kMinusOne ? -1 : 0),
        cnt_(n_),
        cutoff_(n_, floor_),
        by_level_(n_),
        conn_(n_) {
    if (tau <= Rational(0)) throw InvalidArgument("threshold must be positive");
    g.for_each_edge([&](EdgeId id, const GraphEdge& e) {
      grow(id);
      edges_[id] = {e.key, e.weight, level(e.weight), true, false, 0, 0};
      attach(id);
    });
    for (VertexId v = 0; v < n_; ++v) cutoff_[v] = compute_cutoff(v);
    g.for_each_edge([&](EdgeId id, const GraphEdge&) {
      Slot& e = edges_[id];
      e.heavy = heavy_by_cutoffs(e);
      if (e.heavy) {
        conn_.insert(e.key.u, e.key.v);
      } else {
        gt_.light.emplace(e.key, e.weight);
        count_light_insertion(e.level);
      }
    });
    gt_.n = n_;
    gt_.component_of.assign(n_, 0);
    std::unordered_map<ComponentId, std::uint32_t> slot_of;
    for (VertexId v = 0; v < n_; ++v) {
      auto it = slot_of.emplace(conn_.component_id(v), static_cast<std::uint32_t>(slot_of.size())).first;
      gt_.component_of[v] = it->second;
    }
    gt_.component_slots = slot_of.size();
    counters_.half_edge_insertions = n_;
  }

  std::size_t num_vertices() const { return n_; }
  const Rational& tau() const { return tau_; }
  int cutoff(VertexId v) const { return cutoff_[v]; }
  const std::vector<int>& cutoffs() const { return cutoff_; }
  const ThresholdGraph& graph() const { return gt_; }
  const Connectivity& connectivity() const { return conn_; }
  const Counters& counters() const { return counters_; }

  std::set<EdgeKey> heavy_edges() const {
    std::set<EdgeKey> out;
    for (const Slot& e : edges_) {
      if (e.alive && e.heavy) out.insert(e.key);
    }
    return out;
  }

  /// Live light edges per level.
  std::vector<std::size_t> light_by_level() const {
    std::vector<std::size_t> out;
    for (const auto& [key, w] : gt_.light) {
      std::size_t l = static_cast<std::size_t>(level(w));
      if (out.size() <= l) out.resize(l + 1, 0);
      ++out[l];
    }
    return out;
  }

  /// Updates the state after `rec` was applied to the graph and returns the
  /// threshold-graph edits it caused, in the order they should be replayed.
  std::vector<GtauChange> apply(const ChangeRecord& rec) {
    std::vector<GtauChange> out;
    switch (rec.kind) {
      case ChangeRecord::Kind::kNone:
        break;
      case ChangeRecord::Kind::kInserted:
        throw InvalidArgument("threshold maintenance does not take insertions");
      case ChangeRecord::Kind::kRemoved:
        remove(rec, out);
        break;
      case ChangeRecord::Kind::kIncreased:
        increase(rec, out);
        break;
    }
    return out;
  }

 private:
  struct Slot {
    EdgeKey key;
    double weight = 1.0;
    int level = 0;
    bool alive = false;
    bool heavy = false;
    std::uint32_t pos_u = 0;  // index in by_level_[key.u][level]
    std::uint32_t pos_v = 0;
  };

  void grow(EdgeId id) {
    if (edges_.size() <= id) edges_.resize(id + 1);
  }

  void attach(EdgeId id) {
    Slot& e = edges_[id];
    for (VertexId x : {e.key.u, e.key.v}) {
      auto l = static_cast<std::size_t>(e.level);
      if (cnt_[x].size() <= l) {
        cnt_[x].resize(l + 1, 0);
        by_level_[x].resize(l + 1);
      }
      ++cnt_[x][l];
      auto& list = by_level_[x][l];
      (x == e.key.u ? e.pos_u : e.pos_v) = static_cast<std::uint32_t>(list.size());
      list.push_back(id);
    }
  }

  void detach(EdgeId id) {
    Slot& e = edges_[id];
    for (VertexId x : {e.key.u, e.key.v}) {
      auto l = static_cast<std::size_t>(e.level);
      --cnt_[x][l];
      auto& list = by_level_[x][l];
      std::uint32_t pos = x == e.key.u ? e.pos_u : e.pos_v;
      EdgeId moved = list.back();
      list[pos] = moved;
      list.pop_back();
      if (pos < list.size()) {
        Slot& m = edges_[moved];
        (m.key.u == x ? m.pos_u : m.pos_v) = pos;
      }
    }
  }

  // Largest i >= 0 with |I_i(v)| >= tau * 2^i; above the top level the
  // prefix stays at the degree.
  int compute_cutoff(VertexId v) const {
    int best = floor_;
    std::int64_t prefix = 0;
    for (std::size_t i = 0; i < 62; ++i) {
      if (i < cnt_[v].size()) prefix += cnt_[v][i];
      if (int128{prefix} * tau_.den() >= (int128{tau_.num()} << i)) {
        best = static_cast<int>(i);
      } else if (i >= cnt_[v].size()) {
        break;
      }
    }
    return best;
  }

  bool heavy_by_cutoffs(const Slot& e) const {
    return e.level <= cutoff_[e.key.u] || e.level <= cutoff_[e.key.v];
  }

  void count_light_insertion(int lvl) {
    auto l = static_cast<std::size_t>(lvl);
    auto& v = counters_.light_insertions_by_level;
    if (v.size() <= l) v.resize(l + 1, 0);
    ++v[l];
  }

  void remove(const ChangeRecord& rec, std::vector<GtauChange>& out) {
    Slot& e = edges_[rec.edge];
    detach(rec.edge);
    e.alive = false;
    if (e.heavy) {
      split_heavy(e.key, out);
    } else {
      gt_.light.erase(e.key);
      out.push_back({GtauChange::Kind::kDeleteLight, e.key, e.weight});
    }
    refresh_cutoff(e.key.u, out);
    refresh_cutoff(e.key.v, out);
  }

  void increase(const ChangeRecord& rec, std::vector<GtauChange>& out) {
    Slot& e = edges_[rec.edge];
    e.weight = rec.new_weight;
    if (rec.new_level != e.level) {
      detach(rec.edge);
      e.level = rec.new_level;
      attach(rec.edge);
    }
    if (!e.heavy) {
      gt_.light[e.key] = e.weight;
      out.push_back({GtauChange::Kind::kIncreaseLight, e.key, e.weight});
    }
    // Cut-offs fall first, so the edge itself is judged against them too.
    refresh_cutoff(e.key.u, out);
    refresh_cutoff(e.key.v, out);
    if (e.heavy && !heavy_by_cutoffs(e)) make_light(rec.edge, out);
  }

  void refresh_cutoff(VertexId v, std::vector<GtauChange>& out) {
    const int before = cutoff_[v];
    const int now = compute_cutoff(v);
    if (now == before) return;
    cutoff_[v] = now;
    for (int i = now + 1; i <= before; ++i) {
      if (static_cast<std::size_t>(i) >= by_level_[v].size()) break;
      // make_light does not touch this list, so the snapshot is stable.
      std::vector<EdgeId> ids = by_level_[v][static_cast<std::size_t>(i)];
      for (EdgeId id : ids) {
        const Slot& e = edges_[id];
        if (e.heavy && !heavy_by_cutoffs(e)) make_light(id, out);
      }
    }
  }

  void make_light(EdgeId id, std::vector<GtauChange>& out) {
    Slot& e = edges_[id];
    e.heavy = false;
    ++counters_.reclassified;
    gt_.light.emplace(e.key, e.weight);
    count_light_insertion(e.level);
    out.push_back({GtauChange::Kind::kInsertLight, e.key, e.weight});
    split_heavy(e.key, out);
  }

  void split_heavy(EdgeKey key, std::vector<GtauChange>& out) {
    SplitReport r = conn_.erase(key.u, key.v);
    if (!r.split) return;
    const auto slot = static_cast<std::uint32_t>(gt_.component_slots++);
    for (VertexId x : r.smaller_side) {
      GtauChange c;
      c.kind = GtauChange::Kind::kRepoint;
      c.vertex = x;
      c.old_slot = gt_.component_of[x];
      c.new_slot = slot;
      gt_.component_of[x] = slot;
      out.push_back(c);
    }
    counters_.half_edge_insertions += r.smaller_side.size();
    counters_.repointings += r.smaller_side.size();
  }

  std::size_t n_;
  Rational tau_;
  int floor_;
  std::vector<std::vector<std::int64_t>> cnt_;
  std::vector<int> cutoff_;
  std::vector<std::vector<std::vector<EdgeId>>> by_level_;  // [vertex][level] -> edges
  std::vector<Slot> edges_;
  Connectivity conn_;
  ThresholdGraph gt_;
  Counters counters_;
};

/// Replays `changes` onto `gt`.
inline void replay_changes(ThresholdGraph& gt, const std::vector<GtauChange>& changes) {
  for (const auto& c : changes) {
    switch (c.kind) {
      case GtauChange::Kind::kInsertLight:
      case GtauChange::Kind::kIncreaseLight:
        gt.light[c.key] = c.weight;
        break;
      case GtauChange::Kind::kDeleteLight:
        gt.light.erase(c.key);
        break;
      case GtauChange::Kind::kRepoint:
        gt.component_of[c.vertex] = c.new_slot;
        gt.component_slots = std::max<std::size_t>(gt.component_slots, c.new_slot + 1);
        break;
    }
  }
}

}  // namespace desssp
