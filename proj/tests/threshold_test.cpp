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

#include <cmath>
#include <random>
#include <vector>

#include "desssp/oracle.hpp"
#include "desssp/threshold.hpp"
#include "test_support.hpp"

namespace desssp {
namespace {

template <class C>
::testing::AssertionResult matches_fresh(const ThresholdMaintainer<C>& t, const DynamicGraph& g,
                                         CutoffSentinel sentinel = CutoffSentinel::kMinusOne) {
  auto f = oracle::build_gtau_fresh(g, t.tau(), sentinel);
  if (f.cutoff != t.cutoffs()) return ::testing::AssertionFailure() << "cut-offs differ";
  if (f.heavy != t.heavy_edges()) return ::testing::AssertionFailure() << "heavy sets differ";
  if (f.graph.light != t.graph().light) return ::testing::AssertionFailure() << "light edges differ";
  if (f.graph.canonical_partition() != t.graph().canonical_partition()) {
    return ::testing::AssertionFailure() << "components differ";
  }
  return ::testing::AssertionSuccess();
}

TEST(Threshold, CutoffExample) {
  DynamicGraph g(7);
  double w[] = {1, 1, 1, 1, 3, 10};
  for (VertexId i = 0; i < 6; ++i) g.add_edge(0, i + 1, w[i]);
  ThresholdMaintainer<> t(g, Rational(2));
  EXPECT_EQ(t.cutoff(0), 1);
  EXPECT_TRUE(matches_fresh(t, g));
  EXPECT_THROW(ThresholdMaintainer<>(g, Rational(0)), InvalidArgument);
}

TEST(Threshold, SparseVertexHasSentinelCutoff) {
  DynamicGraph g(2);
  g.add_edge(0, 1, 1);
  ThresholdMaintainer<> t(g, Rational(10));
  EXPECT_EQ(t.cutoff(0), -1);
  EXPECT_EQ(t.graph().light.size(), 1u);
  ThresholdMaintainer<> z(g, Rational(10), CutoffSentinel::kZero);
  EXPECT_EQ(z.cutoff(0), 0);
  EXPECT_TRUE(z.graph().light.empty());
}

TEST(Threshold, FreshCountersAndLightDeletion) {
  DynamicGraph g(3);
  g.add_edge(0, 1, 4);
  g.add_edge(1, 2, 4);
  ThresholdMaintainer<> t(g, Rational(10));
  EXPECT_EQ(t.counters().half_edge_insertions, 3u);
  auto changes = t.apply(g.remove(EdgeKey::of(0, 1)));
  ASSERT_EQ(changes.size(), 1u);
  EXPECT_EQ(changes[0].kind, GtauChange::Kind::kDeleteLight);
  EXPECT_EQ(changes[0].key, EdgeKey::of(0, 1));
}

// Two unit-weight cliques joined by one heavy bridge; cutting the bridge
// moves exactly the smaller clique.
TEST(Threshold, BridgeDeletionRepointsSmallerCluster) {
  DynamicGraph g(9);
  for (VertexId a = 0; a < 5; ++a)
    for (VertexId b = a + 1; b < 5; ++b) g.add_edge(a, b, 1);
  for (VertexId a = 5; a < 9; ++a)
    for (VertexId b = a + 1; b < 9; ++b) g.add_edge(a, b, 1);
  g.add_edge(4, 5, 1);
  ThresholdMaintainer<> t(g, Rational(1));
  ASSERT_EQ(t.graph().component_of[0], t.graph().component_of[8]);
  auto changes = t.apply(g.remove(EdgeKey::of(4, 5)));
  std::vector<VertexId> moved;
  for (auto& c : changes) {
    if (c.kind == GtauChange::Kind::kRepoint) moved.push_back(c.vertex);
  }
  EXPECT_EQ(moved, (std::vector<VertexId>{5, 6, 7, 8}));
  EXPECT_TRUE(matches_fresh(t, g));
}

TEST(Threshold, IncreaseTurnsHeavyEdgeLight) {
  DynamicGraph g(3);
  g.add_edge(0, 1, 1);
  g.add_edge(1, 2, 1);
  ThresholdMaintainer<> t(g, Rational(1));
  ASSERT_EQ(t.heavy_edges().size(), 2u);
  auto changes = t.apply(g.increase_weight(EdgeKey::of(0, 1), 8));
  ASSERT_FALSE(changes.empty());
  EXPECT_EQ(changes[0].kind, GtauChange::Kind::kInsertLight);
  EXPECT_EQ(changes[0].weight, 8.0);
  bool repointed = false;
  for (auto& c : changes) repointed |= c.kind == GtauChange::Kind::kRepoint;
  EXPECT_TRUE(repointed);
  EXPECT_TRUE(matches_fresh(t, g));
}

TEST(Threshold, NaiveConnectivityBackend) {
  std::mt19937_64 rng(3);
  auto edges = testing::random_graph(20, 80, 8, rng);
  DynamicGraph g = testing::make_graph(20, edges);
  ThresholdMaintainer<NaiveConnectivity> t(g, Rational(1, 2));
  for (auto& s : testing::decremental_script(edges, 0.3, 8, rng)) {
    if (s.remove) {
      t.apply(g.remove(s.key));
    } else {
      t.apply(g.increase_weight(s.key, static_cast<double>(s.new_weight)));
    }
    ASSERT_TRUE(matches_fresh(t, g));
  }
}

struct RunStats {
  std::size_t steps = 0;
};

// Every property checked after every update of a randomized run.
void run(std::size_t n, std::size_t m, std::int64_t max_w, Rational tau, CutoffSentinel sentinel,
         std::uint64_t seed, RunStats& stats) {
  std::mt19937_64 rng(seed);
  auto edges = testing::random_graph(n, m, max_w, rng);
  DynamicGraph g = testing::make_graph(n, edges);
  ThresholdMaintainer<> t(g, tau, sentinel);
  ThresholdGraph replayed = t.graph();
  ASSERT_TRUE(matches_fresh(t, g, sentinel));
  std::vector<VertexId> sample;
  for (int k = 0; k < 5; ++k) sample.push_back(static_cast<VertexId>(rng() % n));
  const VertexId s = sample[0];
  auto prev_tau_dist = oracle::dijkstra(t.graph(), s);
  auto prev_cutoff = t.cutoffs();
  for (const auto& step : testing::decremental_script(edges, 0.4, 3 * max_w, rng)) {
    ChangeRecord rec = step.remove ? g.remove(step.key)
                                   : g.increase_weight(step.key, static_cast<double>(step.new_weight));
    auto changes = t.apply(rec);
    replay_changes(replayed, changes);
    ++stats.steps;
    ASSERT_TRUE(matches_fresh(t, g, sentinel)) << "seed " << seed << " step " << stats.steps;
    ASSERT_TRUE(replayed.same_up_to_renaming(t.graph()));
    for (VertexId v = 0; v < n; ++v) ASSERT_LE(t.cutoff(v), prev_cutoff[v]);
    prev_cutoff = t.cutoffs();
    auto d = oracle::dijkstra(t.graph(), s);
    for (VertexId v : sample) ASSERT_GE(d[v], prev_tau_dist[v]) << "dist_tau fell";
    prev_tau_dist = d;
    // Light edges at level i number at most n * tau * 2^i.
    auto by_level = t.light_by_level();
    for (std::size_t i = 0; i < by_level.size(); ++i) {
      ASSERT_LE(Rational(static_cast<std::int64_t>(by_level[i])),
                Rational(static_cast<std::int64_t>(n)) * tau * Rational(std::int64_t{1} << i));
    }
  }
  const auto& c = t.counters();
  EXPECT_LE(static_cast<double>(c.half_edge_insertions),
            static_cast<double>(n) * (1 + std::log2(static_cast<double>(n))));
  for (std::size_t i = 0; i < c.light_insertions_by_level.size(); ++i) {
    EXPECT_LE(Rational(static_cast<std::int64_t>(c.light_insertions_by_level[i])),
              Rational(static_cast<std::int64_t>(n)) * tau * Rational(std::int64_t{1} << i));
  }
}

TEST(Threshold, RandomRunsMatchFreshBuilder) {
  RunStats stats;
  const Rational taus[] = {Rational(1, 2), Rational(1), Rational(3), Rational(5, 2)};
  for (std::uint64_t seed = 0; seed < 16; ++seed) {
    run(25 + seed % 20, 150, 16, taus[seed % 4], CutoffSentinel::kMinusOne, seed, stats);
  }
  EXPECT_GE(stats.steps, 2000u);
}

TEST(Threshold, ZeroSentinelVariantMatchesItsBuilder) {
  RunStats stats;
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    run(30, 120, 8, Rational(2), CutoffSentinel::kZero, 50 + seed, stats);
  }
}

}  // namespace
}  // namespace desssp
