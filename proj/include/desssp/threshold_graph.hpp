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
#include <vector>

#include "desssp/graph.hpp"

namespace desssp {

/// Value a vertex's cut-off takes when no level qualifies.
enum class CutoffSentinel {
  kMinusOne,  // no edge is heavy through this endpoint
  kZero,      // level-0 edges are heavy through this endpoint
};

inline constexpr double kComponentEdgeWeight = 0.5;

/// Snapshot of the threshold graph: the light edges of G plus one weight-1/2
/// edge from every vertex to the vertex standing for its heavy component.
///
/// Vertex ids 0..n-1 are the vertices of G; component slot c is vertex n + c.
struct ThresholdGraph {
  std::size_t n = 0;
  std::vector<std::uint32_t> component_of;
  std::size_t component_slots = 0;
  std::map<EdgeKey, double> light;

  std::size_t num_vertices() const { return n + component_slots; }

  std::vector<RealWeightedEdge> edges() const {
    std::vector<RealWeightedEdge> out;
    out.reserve(light.size() + n);
    for (const auto& [key, w] : light) out.push_back({key.u, key.v, w});
    for (VertexId v = 0; v < n; ++v) {
      out.push_back({v, static_cast<VertexId>(n + component_of[v]), kComponentEdgeWeight});
    }
    return out;
  }

  /// Component labels renamed to the smallest member, so two snapshots that
  /// differ only in component naming compare equal.
  std::vector<VertexId> canonical_partition() const {
    std::vector<VertexId> smallest(component_slots, kNoVertex);
    for (VertexId v = 0; v < n; ++v) {
      auto& s = smallest[component_of[v]];
      s = std::min(s, v);
    }
    std::vector<VertexId> out(n);
    for (VertexId v = 0; v < n; ++v) out[v] = smallest[component_of[v]];
    return out;
  }

  bool same_up_to_renaming(const ThresholdGraph& other) const {
    return n == other.n && light == other.light &&
           canonical_partition() == other.canonical_partition();
  }
};

}  // namespace desssp
