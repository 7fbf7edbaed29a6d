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

#include <cmath>
#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "desssp/errors.hpp"

namespace desssp {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();
inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Plain (u, v, w) triple used to hand edge lists between modules.
template <class Weight>
struct BasicWeightedEdge {
  VertexId u = 0;
  VertexId v = 0;
  Weight w{};
};

using WeightedEdge = BasicWeightedEdge<std::int64_t>;
using RealWeightedEdge = BasicWeightedEdge<double>;

/// Canonical unordered vertex pair, u < v.
struct EdgeKey {
  VertexId u = 0;
  VertexId v = 0;

  static EdgeKey of(VertexId a, VertexId b) {
    if (a == b) throw SelfLoop("self loop at vertex " + std::to_string(a));
    return a < b ? EdgeKey{a, b} : EdgeKey{b, a};
  }

  std::uint64_t packed() const { return (std::uint64_t{u} << 32) | v; }
  VertexId other(VertexId x) const { return x == u ? v : u; }

  friend auto operator<=>(const EdgeKey&, const EdgeKey&) = default;

  std::string str() const { return "(" + std::to_string(u) + "," + std::to_string(v) + ")"; }
};

struct EdgeKeyHash {
  std::size_t operator()(const EdgeKey& k) const { return std::hash<std::uint64_t>{}(k.packed()); }
};

/// Weight class of an edge: floor(log2 w), exact for every finite double.
inline int level(double w) {
  if (!(w > 0.0) || !std::isfinite(w)) {
    throw InvalidWeight("level() needs a positive finite weight, got " + std::to_string(w));
  }
  int exponent = 0;
  std::frexp(w, &exponent);  // w = f * 2^exponent, f in [1/2, 1)
  return exponent - 1;
}

/// One lifetime of an edge. Deleting and re-adding a pair starts a new one.
struct EdgeAppearance {
  EdgeKey key;
  double w_o = 1.0;
  int level_o = 0;
  std::uint32_t epoch = 0;
};

struct GraphEdge {
  EdgeKey key;
  double weight = 1.0;
  EdgeAppearance appearance;
  bool alive = false;
  std::uint32_t pos_u = 0;  // index in incident(key.u)
  std::uint32_t pos_v = 0;
};

struct DeleteEdge {
  EdgeKey key;
};
struct IncreaseWeight {
  EdgeKey key;
  double new_weight = 1.0;
};
struct QueryDistance {
  VertexId vertex = 0;
};

using UpdateEvent = std::variant<DeleteEdge, IncreaseWeight, QueryDistance>;

/// What an update did to the graph; every derived structure reacts to these.
struct ChangeRecord {
  enum class Kind { kNone, kInserted, kRemoved, kIncreased };

  Kind kind = Kind::kNone;
  EdgeId edge = kNoEdge;
  EdgeKey key;
  double old_weight = 0.0;
  double new_weight = 0.0;
  int old_level = 0;
  int new_level = 0;

  bool removed() const { return kind == Kind::kRemoved; }
};

/// Mutable weighted undirected graph on a fixed vertex set.
///
/// Edge ids are never reused: a re-added pair gets a fresh id and a fresh
/// EdgeAppearance, while the record of the dead edge stays readable.
class DynamicGraph {
 public:
  explicit DynamicGraph(std::size_t n) : incident_(n) {}

  std::size_t num_vertices() const { return incident_.size(); }
  std::size_t num_edges() const { return live_edges_; }
  std::size_t edge_capacity() const { return edges_.size(); }

  EdgeId add_edge(VertexId a, VertexId b, double w) {
    check_vertex(a);
    check_vertex(b);
    EdgeKey key = EdgeKey::of(a, b);
    check_weight(w);
    if (index_.contains(key)) throw DuplicateEdge("edge " + key.str() + " already present");
    auto id = static_cast<EdgeId>(edges_.size());
    GraphEdge e;
    e.key = key;
    e.weight = w;
    e.appearance = EdgeAppearance{key, w, level(w), epochs_[key]++};
    e.alive = true;
    e.pos_u = static_cast<std::uint32_t>(incident_[key.u].size());
    e.pos_v = static_cast<std::uint32_t>(incident_[key.v].size());
    incident_[key.u].push_back(id);
    incident_[key.v].push_back(id);
    edges_.push_back(e);
    index_.emplace(key, id);
    ++live_edges_;
    return id;
  }

  ChangeRecord insert(EdgeKey key, double w) {
    EdgeId id = add_edge(key.u, key.v, w);
    ChangeRecord rec;
    rec.kind = ChangeRecord::Kind::kInserted;
    rec.edge = id;
    rec.key = key;
    rec.new_weight = w;
    rec.new_level = level(w);
    return rec;
  }

  ChangeRecord remove(EdgeKey key) {
    EdgeId id = require(key);
    GraphEdge& e = edges_[id];
    detach(key.u, e.pos_u);
    detach(key.v, e.pos_v);
    e.alive = false;
    index_.erase(key);
    --live_edges_;
    ChangeRecord rec;
    rec.kind = ChangeRecord::Kind::kRemoved;
    rec.edge = id;
    rec.key = key;
    rec.old_weight = rec.new_weight = e.weight;
    rec.old_level = rec.new_level = level(e.weight);
    return rec;
  }

  ChangeRecord increase_weight(EdgeKey key, double new_weight) {
    EdgeId id = require(key);
    GraphEdge& e = edges_[id];
    check_weight(new_weight);
    if (new_weight < e.weight) {
      throw WeightDecrease("weight of " + key.str() + " would drop from " +
                           std::to_string(e.weight) + " to " + std::to_string(new_weight));
    }
    ChangeRecord rec;
    rec.kind = ChangeRecord::Kind::kIncreased;
    rec.edge = id;
    rec.key = key;
    rec.old_weight = e.weight;
    rec.new_weight = new_weight;
    rec.old_level = level(e.weight);
    rec.new_level = level(new_weight);
    e.weight = new_weight;
    return rec;
  }

  /// Applies one event. Queries leave the graph untouched and yield kNone.
  ChangeRecord apply(const UpdateEvent& event) {
    return std::visit(
        [this](const auto& ev) -> ChangeRecord {
          using T = std::decay_t<decltype(ev)>;
          if constexpr (std::is_same_v<T, DeleteEdge>) {
            return remove(ev.key);
          } else if constexpr (std::is_same_v<T, IncreaseWeight>) {
            return increase_weight(ev.key, ev.new_weight);
          } else {
            check_vertex(ev.vertex);
            return ChangeRecord{};
          }
        },
        event);
  }

  std::optional<EdgeId> find(EdgeKey key) const {
    auto it = index_.find(key);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  const GraphEdge& edge(EdgeId id) const { return edges_[id]; }
  std::span<const EdgeId> incident(VertexId v) const { return incident_[v]; }

  double weight(EdgeKey key) const { return edges_[require(key)].weight; }

  template <class F>
  void for_each_edge(F&& f) const {
    for (EdgeId id = 0; id < edges_.size(); ++id) {
      if (edges_[id].alive) f(id, edges_[id]);
    }
  }

  double max_weight() const {
    double w = 0.0;
    for_each_edge([&](EdgeId, const GraphEdge& e) { w = std::max(w, e.weight); });
    return w;
  }

 private:
  void check_vertex(VertexId v) const {
    if (v >= incident_.size()) {
      throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
    }
  }

  static void check_weight(double w) {
    if (!std::isfinite(w) || w < 1.0) {
      throw InvalidWeight("edge weights must be finite and >= 1, got " + std::to_string(w));
    }
  }

  EdgeId require(EdgeKey key) const {
    auto it = index_.find(key);
    if (it == index_.end()) throw EdgeNotFound("edge " + key.str() + " not present");
    return it->second;
  }

  void detach(VertexId x, std::uint32_t pos) {
    auto& list = incident_[x];
    EdgeId moved = list.back();
    list[pos] = moved;
    list.pop_back();
    if (pos < list.size()) {
      GraphEdge& m = edges_[moved];
      (m.key.u == x ? m.pos_u : m.pos_v) = pos;
    }
  }

  std::vector<std::vector<EdgeId>> incident_;
  std::vector<GraphEdge> edges_;
  std::unordered_map<EdgeKey, EdgeId, EdgeKeyHash> index_;
  std::unordered_map<EdgeKey, std::uint32_t, EdgeKeyHash> epochs_;
  std::size_t live_edges_ = 0;
};

}  // namespace desssp
