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
#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "desssp/connectivity.hpp"

namespace desssp {
namespace {

TEST(HdtConnectivity, InsertExamples) {
  HdtConnectivity c(8);
  EXPECT_FALSE(c.connected(3, 7));
  c.insert(3, 7);
  EXPECT_EQ(c.component_size(3), 2u);
  c.insert(0, 1);
  c.insert(1, 2);
  EXPECT_TRUE(c.connected(0, 2));
  EXPECT_THROW(c.insert(1, 0), DuplicateEdge);
  EXPECT_THROW(c.erase(4, 5), EdgeNotFound);
  EXPECT_THROW(c.insert(2, 2), SelfLoop);
}

TEST(HdtConnectivity, PathSplitReportsSmallerSide) {
  HdtConnectivity c(3);
  c.insert(0, 1);
  c.insert(1, 2);
  auto r = c.erase(0, 1);
  EXPECT_TRUE(r.split);
  EXPECT_EQ(r.smaller_side, std::vector<VertexId>{0});
  EXPECT_EQ(r.surviving_component, c.component_id(1));
}

TEST(HdtConnectivity, TriangleHasReplacement) {
  HdtConnectivity c(3);
  c.insert(0, 1);
  c.insert(1, 2);
  c.insert(0, 2);
  auto r = c.erase(0, 1);
  EXPECT_FALSE(r.split);
  EXPECT_TRUE(c.connected(0, 1));
  EXPECT_TRUE(c.audit());
}

TEST(HdtConnectivity, TieGoesAwayFromLowestVertex) {
  HdtConnectivity c(4);
  c.insert(0, 1);
  c.insert(1, 2);
  c.insert(2, 3);
  auto r = c.erase(1, 2);
  ASSERT_TRUE(r.split);
  EXPECT_EQ(r.smaller_side, (std::vector<VertexId>{2, 3}));
}

// Differential run against the search-based structure; every query and every
// split report must agree after each operation.
void fuzz(std::size_t n, int ops, double p_insert, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  HdtConnectivity fast(n);
  NaiveConnectivity slow(n);
  std::vector<EdgeKey> present;
  std::set<EdgeKey> in;
  std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n - 1));
  std::bernoulli_distribution insert_coin(p_insert);
  for (int op = 0; op < ops; ++op) {
    if (present.empty() || insert_coin(rng)) {
      VertexId a = pick(rng);
      VertexId b = pick(rng);
      if (a == b || in.contains(EdgeKey::of(a, b))) continue;
      fast.insert(a, b);
      slow.insert(a, b);
      present.push_back(EdgeKey::of(a, b));
      in.insert(EdgeKey::of(a, b));
    } else {
      std::uniform_int_distribution<std::size_t> idx(0, present.size() - 1);
      std::size_t i = idx(rng);
      EdgeKey k = present[i];
      present[i] = present.back();
      present.pop_back();
      in.erase(k);
      std::size_t before = slow.component_size(k.u);
      auto rf = fast.erase(k.u, k.v);
      auto rs = slow.erase(k.u, k.v);
      ASSERT_EQ(rf.split, rs.split) << "op " << op;
      ASSERT_EQ(rf.smaller_side, rs.smaller_side) << "op " << op;
      ASSERT_LE(rf.smaller_side.size(), before / 2);
      if (rf.split) {
        const bool u_small =
            std::binary_search(rf.smaller_side.begin(), rf.smaller_side.end(), k.u);
        const VertexId survivor = u_small ? k.v : k.u;
        ASSERT_EQ(rf.surviving_component, fast.component_id(survivor));
      }
    }
    VertexId a = pick(rng);
    VertexId b = pick(rng);
    ASSERT_EQ(fast.connected(a, b), slow.connected(a, b)) << "op " << op;
    ASSERT_EQ(fast.component_size(a), slow.component_size(a)) << "op " << op;
    // Same component id exactly when connected.
    ASSERT_EQ(fast.component_id(a) == fast.component_id(b), slow.connected(a, b));
  }
  EXPECT_TRUE(fast.audit());
}

TEST(HdtConnectivity, FuzzSmallDense) { fuzz(12, 3000, 0.55, 1); }
TEST(HdtConnectivity, FuzzFifty) { fuzz(50, 500, 0.6, 2); }
TEST(HdtConnectivity, FuzzHundred) { fuzz(100, 10000, 0.5, 3); }

TEST(HdtConnectivity, AuditAfterEveryStep) {
  std::mt19937_64 rng(9);
  const std::size_t n = 24;
  HdtConnectivity c(n);
  std::vector<EdgeKey> present;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      if (rng() % 3 == 0) {
        c.insert(a, b);
        present.push_back({a, b});
      }
    }
  }
  std::shuffle(present.begin(), present.end(), rng);
  for (auto k : present) {
    c.erase(k.u, k.v);
    ASSERT_TRUE(c.audit());
  }
  for (VertexId v = 0; v < n; ++v) EXPECT_EQ(c.component_size(v), 1u);
}

// Decremental work stays within a fixed multiple of m log^2 n.
TEST(HdtConnectivity, DecrementalWorkAudit) {
  std::mt19937_64 rng(5);
  const std::size_t n = 400;
  HdtConnectivity c(n);
  std::vector<EdgeKey> present;
  std::set<EdgeKey> in;
  while (present.size() < 4000) {
    VertexId a = rng() % n;
    VertexId b = rng() % n;
    if (a == b || !in.insert(EdgeKey::of(a, b)).second) continue;
    c.insert(a, b);
    present.push_back(EdgeKey::of(a, b));
  }
  const std::uint64_t built = c.work();
  std::shuffle(present.begin(), present.end(), rng);
  for (auto k : present) c.erase(k.u, k.v);
  const double m = static_cast<double>(present.size());
  const double lg = std::log2(static_cast<double>(n));
  const double ratio = static_cast<double>(c.work() - built) / (m * lg * lg);
  EXPECT_LE(ratio, 20.0) << "measured constant " << ratio;
}

}  // namespace
}  // namespace desssp
