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
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "desssp/errors.hpp"
#include "desssp/es_tree.hpp"
#include "desssp/graph.hpp"
#include "desssp/rational.hpp"

namespace desssp {

/// Smallest multiple of beta strictly greater than x.
inline Rational round_mult(const Rational& beta, const Rational& x) {
  if (beta <= Rational(0)) throw InvalidArgument("rounding step must be positive");
  return Rational((x / beta).floor() + 1) * beta;
}

/// x when x <= d, nothing otherwise.
inline std::optional<Rational> bound_d(const Rational& d, const Rational& x) {
  if (x <= d) return x;
  return std::nullopt;
}

struct WsesConfig {
  VertexId source = 0;
  Label depth = 1;
  Rational epsilon{1, 2};
  /// Keep a log of every label-copy refresh, for audits. Costs memory.
  bool log_notifications = false;
};

/// Weight-sensitive Even-Shiloach tree.
///
/// Labels are integers or kUnreachable. Vertex v keeps, per incident edge,
/// a copy of the other endpoint's label, and that copy is refreshed only when
/// the neighbor's label leaves its current window [k*b, (k+1)*b) for
/// b = eps * w_o of the edge. Parents are picked by copy + weight, so an edge
/// is touched O(depth / (eps * w_o)) times over its lifetime.
///
/// A copy is the largest integer in the neighbor's current window, except
/// for edges present at construction, whose copies start out exact and get
/// moved to the top of the window on the endpoint's first increase.
///
/// Labels are finite up to floor((1 + eps) * depth); beyond that a vertex is
/// unreachable for good.
class Wses {
 public:
  enum class Reason : std::uint8_t { kWindow, kSeedRefresh, kUnreachable };

  struct Notification {
    EdgeId edge = kNoEdge;
    int side = 0;  // endpoint whose label moved
    Label old_label = 0;
    Label new_label = 0;
    Reason reason = Reason::kWindow;
  };

  struct EdgeCharge {
    EdgeKey key;
    Label w_o = 1;
    bool alive = false;
    std::uint64_t notifications = 0;
    std::uint64_t touches = 0;
    std::uint64_t total() const { return notifications + touches; }
  };

  struct ChargeReport {
    std::vector<EdgeCharge> edges;             // one per edge appearance
    std::vector<std::uint64_t> vertex_raises;  // per vertex
    std::uint64_t edge_total = 0;
    std::uint64_t work = 0;
  };

  Wses(std::size_t num_vertices, std::span<const WeightedEdge> edges, const WsesConfig& cfg)
      : cfg_(cfg), verts_(num_vertices) {
    if (cfg.depth < 1) throw InvalidArgument("depth bound must be >= 1");
    if (cfg.epsilon <= Rational(0)) throw InvalidArgument("epsilon must be positive");
    if (cfg.source >= num_vertices) throw InvalidArgument("source out of range");
    eps_p_ = cfg.epsilon.num();
    eps_q_ = cfg.epsilon.den();
    cap_ = (Rational(cfg.depth) * (Rational(1) + cfg.epsilon)).floor();

    for (const auto& e : edges) {
      if (e.w < 1) throw NonIntegerWeight("weights must be positive integers");
      if (e.u >= num_vertices || e.v >= num_vertices) throw InvalidArgument("vertex out of range");
    }
    auto init = bounded_dijkstra(num_vertices, edges, cfg.source, cap_);
    for (VertexId v = 0; v < num_vertices; ++v) verts_[v].label = init[v];
    for (const auto& e : edges) {
      EdgeId id = new_edge(e.u, e.v, e.w);
      edges_[id].seeded_exact = true;
      edges_[id].exact[0] = edges_[id].exact[1] = true;
      for (int side = 0; side < 2; ++side) {
        Label l = verts_[edges_[id].end[side]].label;
        set_copy(id, side, l, l == kUnreachable ? kUnreachable : l + 1);
      }
    }
    for (VertexId v = 0; v < num_vertices; ++v) {
      Vertex& x = verts_[v];
      if (v == cfg.source || x.label == kUnreachable) continue;
      x.parent = x.heap.begin()->second;
    }
  }

  std::size_t num_vertices() const { return verts_.size(); }
  VertexId source() const { return cfg_.source; }
  Label depth() const { return cfg_.depth; }
  const Rational& epsilon() const { return cfg_.epsilon; }
  /// Largest finite label.
  Label label_cap() const { return cap_; }

  Label label(VertexId v) const { return verts_[v].label; }
  VertexId parent(VertexId v) const {
    EdgeId p = verts_[v].parent;
    return p == kNoEdge ? kNoVertex : other(p, v);
  }

  bool contains(VertexId u, VertexId v) const {
    if (u == v || u >= verts_.size() || v >= verts_.size()) return false;
    return index_.contains(EdgeKey::of(u, v).packed());
  }

  Label weight(VertexId u, VertexId v) const { return edges_[require(u, v)].w; }

  /// Copy of `of`'s label held at `at` for their edge.
  Label local_label(VertexId at, VertexId of) const {
    const Edge& e = edges_[require(at, of)];
    return e.copy[side_of(e, of)];
  }

  void erase(VertexId u, VertexId v) {
    EdgeId id = require(u, v);
    Edge& e = edges_[id];
    ++e.touches;
    ++work_;
    index_.erase(EdgeKey::of(u, v).packed());
    for (int side = 0; side < 2; ++side) {
      unschedule(id, side);
      drop_key(id, 1 - side);
    }
    e.alive = false;
    for (int side = 0; side < 2; ++side) {
      Vertex& x = verts_[e.end[side]];
      if (x.parent == id) {
        x.parent = kNoEdge;
        enqueue(e.end[side]);
      }
    }
    run();
  }

  void increase_weight(VertexId u, VertexId v, Label new_w) {
    EdgeId id = require(u, v);
    Edge& e = edges_[id];
    if (new_w < e.w) throw WeightDecrease("weight of " + EdgeKey::of(u, v).str() + " would decrease");
    if (new_w == e.w) return;
    ++e.touches;
    ++work_;
    for (int side = 0; side < 2; ++side) drop_key(id, 1 - side);
    e.w = new_w;
    for (int side = 0; side < 2; ++side) add_key(id, 1 - side);
    for (int side = 0; side < 2; ++side) {
      VertexId x = e.end[side];
      if (verts_[x].parent == id && key(id, 1 - side) > verts_[x].label) enqueue(x);
    }
    run();
  }

  /// Adds an edge whose insertion does not decrease any distance. Labels are
  /// left alone; the local copies start at the top of the current windows.
  void insert_monotone(VertexId u, VertexId v, Label w) {
    if (u >= verts_.size() || v >= verts_.size()) throw InvalidArgument("vertex out of range");
    if (w < 1) throw NonIntegerWeight("weights must be positive integers");
    if (contains(u, v)) throw DuplicateEdge("edge " + EdgeKey::of(u, v).str() + " already present");
    ++insertions_;
    EdgeId id = new_edge(u, v, w);
    ++edges_[id].touches;
    for (int side = 0; side < 2; ++side) seed_top_of_window(id, side);
  }

  /// Brings a vertex that has never had an edge into the tree through the
  /// given edges. Its label is the best it can get from the neighbors' copies,
  /// which is a first assignment rather than a decrease.
  void attach_fresh_vertex(VertexId c, std::span<const std::pair<VertexId, Label>> edges) {
    if (c >= verts_.size()) throw InvalidArgument("vertex out of range");
    Vertex& x = verts_[c];
    if (x.used || c == cfg_.source) throw InvalidArgument("vertex " + std::to_string(c) + " is not fresh");
    x.used = true;
    ++insertions_;
    std::vector<EdgeId> ids;
    for (auto [u, w] : edges) {
      if (w < 1) throw NonIntegerWeight("weights must be positive integers");
      if (contains(c, u)) throw DuplicateEdge("edge " + EdgeKey::of(c, u).str() + " already present");
      EdgeId id = new_edge(u, c, w);
      ++edges_[id].touches;
      seed_top_of_window(id, 0);  // c's copy of u
      ids.push_back(id);
    }
    if (!x.heap.empty() && x.heap.begin()->first <= cap_) {
      x.label = x.heap.begin()->first;
      x.parent = x.heap.begin()->second;
    }
    for (EdgeId id : ids) seed_top_of_window(id, 1);  // u's copy of c
  }

  ChargeReport charge_report() const {
    ChargeReport r;
    for (const Edge& e : edges_) {
      EdgeCharge c{EdgeKey::of(e.end[0], e.end[1]), e.w_o, e.alive, e.notifications, e.touches};
      r.edge_total += c.total();
      r.edges.push_back(c);
    }
    for (const Vertex& x : verts_) r.vertex_raises.push_back(x.raises);
    r.work = work_;
    return r;
  }

  /// Number of logical buckets per vertex: label values up to the depth
  /// split into windows of the smallest possible width eps.
  std::int64_t logical_bucket_count() const {
    return (Rational(cfg_.depth) / cfg_.epsilon).floor();
  }

  /// Number of windows of width eps * w_o that cover [0, depth]: the
  /// buckets of one vertex an edge with original weight w_o sits in.
  std::int64_t buckets_for(Label w_o) const {
    return (Rational(cfg_.depth) / (cfg_.epsilon * Rational(w_o))).ceil() + 1;
  }

  /// Same count over the whole finite label range [0, floor((1 + eps) * depth)].
  /// Labels above the depth still pay for their windows, so this is the
  /// count that bounds the charges when labels may exceed the depth.
  std::int64_t windows_for(Label w_o) const {
    return (Rational(cap_) / (cfg_.epsilon * Rational(w_o))).ceil() + 1;
  }

  const std::vector<Notification>& notifications() const { return log_; }
  std::uint64_t insertions() const { return insertions_; }
  bool queue_order_ok() const { return queue_order_ok_; }

  // -- audits; each returns one message per violation ------------------

  /// delta(u) <= copy <= round_{eps*w_o}(delta(u)) on every live edge.
  std::vector<std::string> check_local_information() const {
    std::vector<std::string> bad;
    for (EdgeId id = 0; id < edges_.size(); ++id) {
      const Edge& e = edges_[id];
      if (!e.alive) continue;
      for (int side = 0; side < 2; ++side) {
        Label l = verts_[e.end[side]].label;
        Label c = e.copy[side];
        bool ok;
        if (l == kUnreachable) {
          ok = c == kUnreachable;
        } else {
          // c < round(l) is the same as c <= hi(l) for integers.
          ok = c != kUnreachable && l <= c && c <= hi(l, e.w_o);
        }
        if (!ok) bad.push_back("copy of " + std::to_string(e.end[side]) + " on " + key_str(id));
      }
    }
    return bad;
  }

  /// The parent edge supports the label: copy + w <= delta(v), with equality
  /// and minimality when `strict`. Strict holds while no edge was inserted.
  std::vector<std::string> check_parent_choice(bool strict) const {
    std::vector<std::string> bad;
    for (VertexId v = 0; v < verts_.size(); ++v) {
      const Vertex& x = verts_[v];
      if (v == cfg_.source || x.label == kUnreachable) continue;
      if (x.parent == kNoEdge || !edges_[x.parent].alive) {
        bad.push_back("vertex " + std::to_string(v) + " has no parent");
        continue;
      }
      const Edge& e = edges_[x.parent];
      Label k = key(x.parent, 1 - side_of(e, v));
      if (k > x.label) bad.push_back("parent of " + std::to_string(v) + " does not support it");
      if (strict) {
        if (k != x.label) bad.push_back("label of " + std::to_string(v) + " is not parent copy + w");
        if (!x.heap.empty() && x.heap.begin()->first < k) {
          bad.push_back("parent of " + std::to_string(v) + " is not the argmin");
        }
      }
    }
    return bad;
  }

  /// For every vertex, either the relaxed approximation conditions hold or
  /// the label is unchanged from `before`.
  std::vector<std::string> check_relaxed_approximation(const std::vector<Label>& before) const {
    std::vector<std::string> bad;
    if (verts_[cfg_.source].label != 0) bad.push_back("source label is not 0");
    std::vector<char> ok(verts_.size(), 1);
    for (VertexId v = 0; v < verts_.size(); ++v) {
      const Vertex& x = verts_[v];
      if (v == cfg_.source || x.label == kUnreachable || x.parent == kNoEdge) continue;
      const Edge& e = edges_[x.parent];
      Label pl = verts_[other(x.parent, v)].label;
      if (pl == kUnreachable || x.label < pl + e.w) ok[v] = 0;
    }
    for (EdgeId id = 0; id < edges_.size(); ++id) {
      const Edge& e = edges_[id];
      if (!e.alive) continue;
      for (int side = 0; side < 2; ++side) {
        Label lu = verts_[e.end[side]].label;
        VertexId v = e.end[1 - side];
        Label lv = verts_[v].label;
        if (lu == kUnreachable) continue;
        // (lv - lu - w) * q <= p * w_o, or for unreachable v, > cap slack.
        int128 slack = int128{eps_p_} * e.w_o;
        if (lv == kUnreachable) {
          if ((int128{cap_} - lu - e.w) * eps_q_ >= slack) ok[v] = 0;
        } else if ((int128{lv} - lu - e.w) * eps_q_ > slack) {
          ok[v] = 0;
        }
      }
    }
    for (VertexId v = 0; v < verts_.size(); ++v) {
      if (!ok[v] && (v >= before.size() || before[v] != verts_[v].label)) {
        bad.push_back("vertex " + std::to_string(v) + " breaks the approximation invariant");
      }
    }
    return bad;
  }

  /// Every logged refresh moved the copy to a new window, made it
  /// unreachable, or was the single first-increase refresh of a
  /// construction-time edge.
  std::vector<std::string> check_update_time() const {
    std::vector<std::string> bad;
    std::set<std::pair<EdgeId, int>> seeded;
    for (const auto& n : log_) {
      const Edge& e = edges_[n.edge];
      switch (n.reason) {
        case Reason::kWindow:
          if (n.new_label == kUnreachable || window(n.old_label, e.w_o) == window(n.new_label, e.w_o)) {
            bad.push_back("refresh without window change on " + key_str(n.edge));
          }
          break;
        case Reason::kSeedRefresh:
          if (!e.seeded_exact || !seeded.insert({n.edge, n.side}).second) {
            bad.push_back("repeated first-increase refresh on " + key_str(n.edge));
          }
          break;
        case Reason::kUnreachable:
          if (n.new_label != kUnreachable) bad.push_back("bogus unreachable refresh");
          break;
      }
    }
    if (!queue_order_ok_) bad.push_back("queue popped labels out of order");
    return bad;
  }

  std::vector<Label> labels() const {
    std::vector<Label> out(verts_.size());
    for (VertexId v = 0; v < verts_.size(); ++v) out[v] = verts_[v].label;
    return out;
  }

 private:
  struct Edge {
    VertexId end[2] = {0, 0};
    Label w = 1;
    Label w_o = 1;
    bool alive = true;
    bool seeded_exact = false;
    bool exact[2] = {false, false};  // copy still holds the construction-time label
    // copy[j]: label of end[j] as known at end[1-j].
    Label copy[2] = {kUnreachable, kUnreachable};
    // next[j]: end[j]'s label at which copy[j] must be refreshed.
    Label next[2] = {kUnreachable, kUnreachable};
    std::uint64_t notifications = 0;
    std::uint64_t touches = 0;
  };

  struct Vertex {
    Label label = kUnreachable;
    EdgeId parent = kNoEdge;
    std::set<std::pair<Label, EdgeId>> heap;      // (copy + w, edge) of incident edges
    std::set<std::pair<Label, EdgeId>> schedule;  // (next, edge) for edges to notify
    std::vector<EdgeId> incident;
    std::uint64_t raises = 0;
    bool queued = false;
    bool used = false;
  };

  static int side_of(const Edge& e, VertexId v) { return e.end[0] == v ? 0 : 1; }
  VertexId other(EdgeId id, VertexId v) const {
    const Edge& e = edges_[id];
    return e.end[0] == v ? e.end[1] : e.end[0];
  }

  std::string key_str(EdgeId id) const {
    return EdgeKey::of(edges_[id].end[0], edges_[id].end[1]).str();
  }

  EdgeId require(VertexId u, VertexId v) const {
    if (u >= verts_.size() || v >= verts_.size()) throw InvalidArgument("vertex out of range");
    auto it = index_.find(EdgeKey::of(u, v).packed());
    if (it == index_.end()) throw EdgeNotFound("edge " + EdgeKey::of(u, v).str() + " not present");
    return it->second;
  }

  /// Window index floor(x / (eps * w_o)).
  std::int64_t window(Label x, Label w_o) const {
    if (x == kUnreachable) return -1;
    return static_cast<std::int64_t>((int128{x} * eps_q_) / (int128{eps_p_} * w_o));
  }

  /// Largest integer strictly below round_{eps*w_o}(x).
  Label hi(Label x, Label w_o) const {
    int128 k = window(x, w_o);
    int128 top = (k + 1) * eps_p_ * w_o;  // round(x) = top / q
    int128 c = (top + eps_q_ - 1) / eps_q_;
    return static_cast<Label>(c - 1);
  }

  EdgeId new_edge(VertexId a, VertexId b, Label w) {
    EdgeKey k = EdgeKey::of(a, b);
    if (index_.contains(k.packed())) throw DuplicateEdge("edge " + k.str() + " repeated");
    auto id = static_cast<EdgeId>(edges_.size());
    Edge e;
    e.end[0] = a;
    e.end[1] = b;
    e.w = e.w_o = w;
    edges_.push_back(e);
    index_.emplace(k.packed(), id);
    verts_[a].incident.push_back(id);
    verts_[b].incident.push_back(id);
    verts_[a].used = verts_[b].used = true;
    return id;
  }

  Label key(EdgeId id, int side) const {
    const Edge& e = edges_[id];
    return saturating_add(e.copy[side], e.w);
  }

  // Key of copy[side] lives in the heap of end[1 - side].
  void add_key(EdgeId id, int side) {
    const Edge& e = edges_[id];
    if (e.copy[side] == kUnreachable) return;
    verts_[e.end[1 - side]].heap.emplace(key(id, side), id);
    ++work_;
  }
  void drop_key(EdgeId id, int side) {
    const Edge& e = edges_[id];
    if (e.copy[side] == kUnreachable) return;
    verts_[e.end[1 - side]].heap.erase({key(id, side), id});
    ++work_;
  }

  void unschedule(EdgeId id, int side) {
    Edge& e = edges_[id];
    if (e.next[side] != kUnreachable) {
      verts_[e.end[side]].schedule.erase({e.next[side], id});
      e.next[side] = kUnreachable;
    }
  }

  void set_copy(EdgeId id, int side, Label copy, Label next) {
    Edge& e = edges_[id];
    drop_key(id, side);
    unschedule(id, side);
    e.copy[side] = copy;
    e.next[side] = next;
    add_key(id, side);
    if (next != kUnreachable) verts_[e.end[side]].schedule.emplace(next, id);
  }

  void seed_top_of_window(EdgeId id, int side) {
    const Edge& e = edges_[id];
    Label l = verts_[e.end[side]].label;
    if (l == kUnreachable) {
      set_copy(id, side, kUnreachable, kUnreachable);
    } else {
      Label c = hi(l, e.w_o);
      set_copy(id, side, c, c + 1);
    }
  }

  void enqueue(VertexId v) {
    Vertex& x = verts_[v];
    if (v == cfg_.source || x.label == kUnreachable || x.queued) return;
    x.queued = true;
    queue_.emplace(x.label, v);
  }

  void run() {
    Label last = 0;
    while (!queue_.empty()) {
      auto [l, v] = *queue_.begin();
      queue_.erase(queue_.begin());
      if (l < last) queue_order_ok_ = false;
      last = l;
      Vertex& x = verts_[v];
      x.queued = false;
      ++work_;
      Label m = x.heap.empty() ? kUnreachable : x.heap.begin()->first;
      if (m <= x.label) {
        x.parent = x.heap.begin()->second;
        continue;
      }
      raise(v, m);
    }
  }

  void raise(VertexId v, Label m) {
    Vertex& x = verts_[v];
    ++x.raises;
    if (m > cap_) {
      x.label = kUnreachable;
      x.parent = kNoEdge;
    } else {
      x.label = m;
      x.parent = x.heap.begin()->second;
    }
    // Refresh every copy whose window this increase left.
    std::vector<EdgeId> due;
    for (auto it = x.schedule.begin(); it != x.schedule.end() && it->first <= x.label;) {
      due.push_back(it->second);
      it = x.schedule.erase(it);
    }
    for (EdgeId id : due) {
      Edge& e = edges_[id];
      const int side = side_of(e, v);
      e.next[side] = kUnreachable;
      Reason why = Reason::kWindow;
      if (x.label == kUnreachable) {
        why = Reason::kUnreachable;
      } else if (e.exact[side]) {
        why = Reason::kSeedRefresh;
      }
      e.exact[side] = false;
      if (cfg_.log_notifications) log_.push_back({id, side, e.copy[side], x.label, why});
      ++e.notifications;
      if (x.label == kUnreachable) {
        set_copy(id, side, kUnreachable, kUnreachable);
      } else {
        Label c = hi(x.label, e.w_o);
        set_copy(id, side, c, c + 1);
      }
      VertexId y = e.end[1 - side];
      if (verts_[y].parent == id && key(id, side) > verts_[y].label) enqueue(y);
    }
  }

  WsesConfig cfg_;
  std::int64_t eps_p_ = 1;
  std::int64_t eps_q_ = 2;
  Label cap_ = 1;
  std::vector<Vertex> verts_;
  std::vector<Edge> edges_;
  std::unordered_map<std::uint64_t, EdgeId> index_;
  std::set<std::pair<Label, VertexId>> queue_;
  std::vector<Notification> log_;
  std::uint64_t work_ = 0;
  std::uint64_t insertions_ = 0;
  bool queue_order_ok_ = true;
};

}  // namespace desssp
