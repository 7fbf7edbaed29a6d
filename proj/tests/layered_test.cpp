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


#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "desssp/layered.hpp"
#include "desssp/oracle.hpp"
#include "test_support.hpp"

namespace desssp {
namespace {

TEST(ScaledWeight, MatchesRationalRounding) {
  Rational beta(1, 40);
  EXPECT_EQ(scaled_weight(0.5, beta), 21);
  EXPECT_EQ(scaled_weight(1.0, beta), 41);
  std::mt19937_64 rng(1);
  for (int k = 0; k < 500; ++k) {
    Rational b(static_cast<std::int64_t>(1 + rng() % 64), static_cast<std::int64_t>(1 + rng() % 500));
    double w = 0.5 + static_cast<double>(rng() % 4000) / 16.0;
    Rational expect = round_mult(b, exact_rational(w)) / b;
    ASSERT_TRUE(expect.is_integer());
    ASSERT_EQ(scaled_weight(w, b), expect.num()) << w;
  }
  EXPECT_THROW(scaled_weight(0.0, beta), InvalidWeight);
}

TEST(ScaledLayer, Parameters) {
  DynamicGraph g(10);
  for (VertexId v = 0; v + 1 < 10; ++v) g.add_edge(v, v + 1, 1);
  ScaledLayer layer(g, 0, Rational(1, 2), 0);
  EXPECT_EQ(layer.d(), 1);
  EXPECT_EQ(layer.tau(), Rational(20));
  EXPECT_EQ(layer.beta(), Rational(1, 40));
  EXPECT_EQ(layer.scaled_depth(), 40);
}

TEST(Layered, PathQuery) {
  DynamicGraph g(10);
  for (VertexId v = 0; v + 1 < 10; ++v) g.add_edge(v, v + 1, 1);
  LayeredSssp sys(g, 0, Rational(1, 10), 1);
  ASSERT_EQ(sys.layers().size(), 5u);
  auto a = sys.query_exact(9);
  ASSERT_TRUE(a.has_value());
  EXPECT_GE(*a, Rational(9));
  EXPECT_LE(*a, Rational(9) * Rational(4));
  // Layer 3: beta = 1/25, nine edges of scaled weight 26, plus 14 * 8 / 10.
  EXPECT_EQ(*a, Rational(514, 25));
}

TEST(Layered, SourceAndDisconnected) {
  DynamicGraph g(4);
  g.add_edge(0, 1, 3);
  g.add_edge(2, 3, 1);
  LayeredSssp sys(g, 0, Rational(1, 5), 4);
  EXPECT_EQ(sys.query(0), 0.0);
  EXPECT_EQ(sys.raw_min_over_layers(0), Rational(14, 5));
  EXPECT_EQ(sys.query(2), kInfinity);
  EXPECT_EQ(sys.query(3), kInfinity);
  sys.apply(DeleteEdge{EdgeKey::of(0, 1)});
  EXPECT_EQ(sys.query(1), kInfinity);
}

TEST(Layered, Errors) {
  DynamicGraph g(3);
  g.add_edge(0, 1, 5);
  EXPECT_THROW(LayeredSssp(g, 0, Rational(1), 8), InvalidArgument);
  EXPECT_THROW(LayeredSssp(g, 0, Rational(1, 5), 4), InvalidArgument);
  EXPECT_THROW(LayeredSssp(g, 7, Rational(1, 5), 8), InvalidArgument);
  LayeredSssp sys(g, 0, Rational(1, 5), 8);
  EXPECT_THROW(sys.apply(DeleteEdge{EdgeKey::of(1, 2)}), EdgeNotFound);
  EXPECT_THROW(sys.apply(IncreaseWeight{EdgeKey::of(0, 1), 2}), WeightDecrease);
}

// Scaled threshold graph of one layer, for the rounding checks.
std::vector<RealWeightedEdge> scaled_edges(const ScaledLayer& layer, std::size_t n) {
  std::vector<RealWeightedEdge> out;
  const ThresholdGraph& gt = layer.threshold().graph();
  for (const auto& [key, w] : gt.light) {
    if (w <= static_cast<double>(layer.d())) {
      out.push_back({key.u, key.v, static_cast<double>(scaled_weight(w, layer.beta()))});
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    out.push_back({v, static_cast<VertexId>(n + gt.component_of[v]),
                   static_cast<double>(scaled_weight(0.5, layer.beta()))});
  }
  return out;
}

void audit_layers(const LayeredSssp& sys, const std::vector<double>& dist, std::size_t n) {
  const Rational eps = sys.epsilon();
  for (const auto& layer : sys.layers()) {
    const Rational d(layer.d());
    for (VertexId v = 0; v < n; ++v) {
      auto a = layer.distance(v);
      if (dist[v] == kInfinity) {
        ASSERT_FALSE(a.has_value());
        continue;
      }
      Rational dv = exact_rational(dist[v]);
      if (a) {
        ASSERT_LE(dv, *a) << "layer " << layer.index() << " vertex " << v;
      }
      if (dv <= d) {
        ASSERT_TRUE(a.has_value()) << "layer " << layer.index() << " vertex " << v;
        ASSERT_LE(*a, dv + Rational(15) * eps * d) << "layer " << layer.index() << " vertex " << v;
      }
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    auto a = sys.query_exact(v);
    if (dist[v] == kInfinity) {
      ASSERT_FALSE(a.has_value());
      continue;
    }
    ASSERT_TRUE(a.has_value());
    Rational dv = exact_rational(dist[v]);
    ASSERT_LE(dv, *a);
    ASSERT_LE(*a, (Rational(1) + Rational(30) * eps) * dv) << "vertex " << v;
  }
}

TEST(Layered, RandomRunKeepsEveryLayerContract) {
  std::mt19937_64 rng(77);
  for (int round = 0; round < 3; ++round) {
    const std::size_t n = 30;
    auto edges = testing::random_graph(n, 120, 32, rng);
    DynamicGraph g = testing::make_graph(n, edges);
    LayeredSssp sys(g, 0, Rational(1, 4), 64);
    audit_layers(sys, oracle::dijkstra(sys.graph(), 0), n);
    auto script = testing::decremental_script(edges, 0.5, 32, rng);
    script.resize(std::min<std::size_t>(script.size(), 200));
    std::vector<std::vector<Label>> prev;
    for (const auto& layer : sys.layers()) prev.push_back(layer.wses().labels());
    for (const auto& s : script) {
      if (s.remove) {
        sys.apply(DeleteEdge{s.key});
      } else {
        sys.apply(IncreaseWeight{s.key, static_cast<double>(s.new_weight)});
      }
      audit_layers(sys, oracle::dijkstra(sys.graph(), 0), n);
      for (std::size_t i = 0; i < sys.layers().size(); ++i) {
        auto now = sys.layers()[i].wses().labels();
        // Unused component slots start unreachable and may be attached fresh.
        for (std::size_t v = 0; v < now.size(); ++v) {
          if (v >= n && prev[i][v] == kUnreachable) continue;
          ASSERT_GE(now[v], prev[i][v]) << "layer " << i << " vertex " << v;
        }
        prev[i] = now;
      }
    }
  }
}

// Rounding to multiples of beta adds less than beta per edge, and a simple
// path in the threshold graph has fewer than 2n edges.
TEST(Layered, ScalingSoundnessAndLevelSpan) {
  std::mt19937_64 rng(78);
  const std::size_t n = 25;
  auto edges = testing::random_graph(n, 100, 64, rng);
  DynamicGraph g = testing::make_graph(n, edges);
  LayeredSssp sys(g, 0, Rational(1, 5), 64);
  for (const auto& layer : sys.layers()) {
    const ThresholdGraph& gt = layer.threshold().graph();
    auto se = scaled_edges(layer, n);
    auto scaled = oracle::dijkstra(gt.num_vertices(), se, 0);
    std::vector<RealWeightedEdge> kept;
    for (const auto& e : gt.edges()) {
      if (e.w <= static_cast<double>(layer.d())) kept.push_back(e);
    }
    auto plain = oracle::dijkstra(gt.num_vertices(), kept, 0);
    for (VertexId v = 0; v < n; ++v) {
      if (plain[v] == kInfinity) continue;
      Rational lhs = layer.beta() * exact_rational(scaled[v]);
      ASSERT_LE(exact_rational(plain[v]), lhs);
      ASSERT_LE(lhs, exact_rational(plain[v]) + Rational(2 * static_cast<std::int64_t>(n)) * layer.beta());
    }
    for (const auto& [key, w] : gt.light) {
      ASSERT_GE(exact_rational(w), Rational(1) / (Rational(2) * layer.tau()));
    }
  }
}

}  // namespace
}  // namespace desssp
