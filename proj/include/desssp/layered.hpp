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

#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <unordered_set>
#include <utility>
#include <vector>

#include "desssp/errors.hpp"
#include "desssp/graph.hpp"
#include "desssp/rational.hpp"
#include "desssp/threshold.hpp"
#include "desssp/wses.hpp"

namespace desssp {

/// round_mult(beta, w) / beta = floor(w / beta) + 1, exactly, for a finite
/// positive double w.
inline Label scaled_weight(double w, const Rational& beta) {
  if (!(w > 0.0) || !std::isfinite(w)) throw InvalidWeight("cannot scale a non-positive weight");
  int e = 0;
  double f = std::frexp(w, &e);
  auto mantissa = static_cast<std::int64_t>(std::ldexp(f, 53));
  const int shift = e - 53;
  // w / beta = mantissa * 2^shift * den / num
  int128 top = int128{mantissa} * beta.den();
  int128 bottom = beta.num();
  if (shift >= 0) {
    if (shift > 40) throw InvalidArgument("weight too large to scale");
    top <<= shift;
  } else if (-shift < 64) {
    bottom <<= -shift;
  } else {
    return 1;
  }
  int128 q = top / bottom;
  if (q > int128{1} << 60) throw InvalidArgument("scaled weight overflows");
  return static_cast<Label>(q) + 1;
}

/// One distance scale d = 2^i: a threshold graph with tau = n / (eps d),
/// rounded to multiples of beta = d eps / (2n), under a WSES tree.
///
/// Threshold-graph vertex n + c stands for component slot c. Light edges
/// heavier than d are left out of the tree for good.
class ScaledLayer {
 public:
  ScaledLayer(const DynamicGraph& g, VertexId source, const Rational& eps, int i)
      : n_(static_cast<std::int64_t>(g.num_vertices())),
        i_(i),
        d_(std::int64_t{1} << i),
        eps_(eps),
        tau_(Rational(int128{n_} * eps.den(), int128{d_} * eps.num())),
        beta_(Rational(int128{d_} * eps.num(), int128{2} * n_ * eps.den())),
        scaled_depth_(Rational(int128{2} * n_ * eps.den(), int128{eps.num()}).ceil()),
        threshold_(g, tau_),
        wses_(make_wses(g, source)) {}

  int index() const { return i_; }
  std::int64_t d() const { return d_; }
  const Rational& tau() const { return tau_; }
  const Rational& beta() const { return beta_; }
  /// ceil(2n / eps)
  Label scaled_depth() const { return scaled_depth_; }
  const ThresholdMaintainer<>& threshold() const { return threshold_; }
  const Wses& wses() const { return wses_; }

  void apply(const ChangeRecord& rec) {
    auto changes = threshold_.apply(rec);
    for (std::size_t k = 0; k < changes.size();) {
      const GtauChange& c = changes[k];
      if (c.kind == GtauChange::Kind::kRepoint) {
        std::size_t end = k;
        while (end < changes.size() && changes[end].kind == GtauChange::Kind::kRepoint &&
               changes[end].new_slot == c.new_slot) {
          ++end;
        }
        repoint(changes, k, end);
        k = end;
        continue;
      }
      forward(c);
      ++k;
    }
  }

  /// beta * delta + 14 eps d, or nothing when delta is unreachable.
  std::optional<Rational> distance(VertexId v) const {
    Label l = wses_.label(v);
    if (l == kUnreachable) return std::nullopt;
    return beta_ * Rational(l) + Rational(14) * eps_ * Rational(d_);
  }

 private:
  Wses make_wses(const DynamicGraph& g, VertexId source) {
    const ThresholdGraph& gt = threshold_.graph();
    std::vector<WeightedEdge> edges;
    for (const auto& [key, w] : gt.light) {
      if (w > static_cast<double>(d_)) continue;
      edges.push_back({key.u, key.v, scaled_weight(w, beta_)});
      present_.insert(key.packed());
    }
    const Label half = scaled_weight(kComponentEdgeWeight, beta_);
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      edges.push_back({v, slot_vertex(gt.component_of[v]), half});
    }
    WsesConfig cfg;
    cfg.source = source;
    cfg.depth = scaled_depth_ + 2 * n_;
    cfg.epsilon = eps_;
    return Wses(static_cast<std::size_t>(2 * n_), edges, cfg);
  }

  VertexId slot_vertex(std::uint32_t slot) const { return static_cast<VertexId>(n_ + slot); }

  void forward(const GtauChange& c) {
    const bool in_tree = present_.contains(c.key.packed());
    switch (c.kind) {
      case GtauChange::Kind::kInsertLight:
        if (c.weight <= static_cast<double>(d_)) {
          wses_.insert_monotone(c.key.u, c.key.v, scaled_weight(c.weight, beta_));
          present_.insert(c.key.packed());
        }
        break;
      case GtauChange::Kind::kDeleteLight:
        if (in_tree) {
          wses_.erase(c.key.u, c.key.v);
          present_.erase(c.key.packed());
        }
        break;
      case GtauChange::Kind::kIncreaseLight:
        if (!in_tree) break;
        if (c.weight > static_cast<double>(d_)) {
          wses_.erase(c.key.u, c.key.v);
          present_.erase(c.key.packed());
        } else {
          wses_.increase_weight(c.key.u, c.key.v, scaled_weight(c.weight, beta_));
        }
        break;
      case GtauChange::Kind::kRepoint:
        break;
    }
  }

  // The new component vertex joins with all of its half edges before the old
  // ones go, so the moved vertices never lose their path in between.
  void repoint(const std::vector<GtauChange>& changes, std::size_t begin, std::size_t end) {
    const Label half = scaled_weight(kComponentEdgeWeight, beta_);
    std::vector<std::pair<VertexId, Label>> links;
    for (std::size_t k = begin; k < end; ++k) links.emplace_back(changes[k].vertex, half);
    wses_.attach_fresh_vertex(slot_vertex(changes[begin].new_slot), links);
    for (std::size_t k = begin; k < end; ++k) {
      wses_.erase(changes[k].vertex, slot_vertex(changes[k].old_slot));
    }
  }

  std::int64_t n_;
  int i_;
  std::int64_t d_;
  Rational eps_;
  Rational tau_;
  Rational beta_;
  Label scaled_depth_;
  ThresholdMaintainer<> threshold_;
  std::unordered_set<std::uint64_t> present_;  // light keys inside the tree
  Wses wses_;
};

/// All scales i = 0 .. ceil(log2(n W)) over one graph; a query takes the
/// minimum layer answer.
class LayeredSssp {
 public:
  LayeredSssp(DynamicGraph g, VertexId source, const Rational& eps, double w_max)
      : g_(std::move(g)), source_(source), eps_(eps) {
    if (!(eps > Rational(0) && eps < Rational(1))) throw InvalidArgument("epsilon must lie in (0, 1)");
    if (source >= g_.num_vertices()) throw InvalidArgument("source out of range");
    if (!(w_max >= 1.0) || !std::isfinite(w_max)) throw InvalidArgument("declared W must be >= 1");
    if (g_.max_weight() > w_max) throw InvalidArgument("an edge is heavier than the declared W");
    const double nw = static_cast<double>(g_.num_vertices()) * w_max;
    const int top = std::max(0, static_cast<int>(std::ceil(std::log2(nw))));
    for (int i = 0; i <= top; ++i) layers_.emplace_back(g_, source, eps, i);
  }

  const DynamicGraph& graph() const { return g_; }
  VertexId source() const { return source_; }
  const Rational& epsilon() const { return eps_; }
  const std::vector<ScaledLayer>& layers() const { return layers_; }

  ChangeRecord apply(const UpdateEvent& event) {
    ChangeRecord rec = g_.apply(event);
    if (rec.kind == ChangeRecord::Kind::kNone) return rec;
    for (auto& layer : layers_) layer.apply(rec);
    return rec;
  }

  /// Smallest layer answer, with the source pinned to 0.
  std::optional<Rational> query_exact(VertexId v) const {
    if (v == source_) return Rational(0);
    return raw_min_over_layers(v);
  }

  double query(VertexId v) const {
    auto a = query_exact(v);
    return a ? a->to_double() : kInfinity;
  }

  /// Minimum over layers without the source special case; at the source
  /// this is the additive offset of layer 0.
  std::optional<Rational> raw_min_over_layers(VertexId v) const {
    std::optional<Rational> best;
    for (const auto& layer : layers_) {
      auto a = layer.distance(v);
      if (a && (!best || *a < *best)) best = a;
    }
    return best;
  }

 private:
  DynamicGraph g_;
  VertexId source_;
  Rational eps_;
  std::vector<ScaledLayer> layers_;
};

}  // namespace desssp
