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
#include <sstream>
#include <string>

#include "desssp/trace.hpp"

namespace desssp {
namespace {

const char* kSmall =
    "# triangle\n"
    "n 3 w 8\n"
    "e 0 1 2\n"
    "e 1 2 3   # trailing comment\n"
    "e 0 2 8\n"
    "\n"
    "q 2\n"
    "i 0 1 4\n"
    "d 1 2\n"
    "q 2\n";

TEST(Trace, ParseAndRoundTrip) {
  UpdateTrace t = parse_trace(std::string_view(kSmall));
  EXPECT_EQ(t.n, 3u);
  EXPECT_EQ(t.w_max, 8.0);
  ASSERT_EQ(t.edges.size(), 3u);
  ASSERT_EQ(t.ops.size(), 4u);
  EXPECT_TRUE(std::holds_alternative<IncreaseWeight>(t.ops[1]));
  EXPECT_EQ(std::get<IncreaseWeight>(t.ops[1]).new_weight, 4.0);
  const std::string text = format_trace(t);
  EXPECT_EQ(text, "n 3 w 8\ne 0 1 2\ne 1 2 3\ne 0 2 8\nq 2\ni 0 1 4\nd 1 2\nq 2\n");
  EXPECT_EQ(format_trace(parse_trace(std::string_view(text))), text);
}

TEST(Trace, FractionalWeightsRoundTrip) {
  UpdateTrace t = parse_trace(std::string_view("n 2 w 4\ne 0 1 1.1\ni 0 1 3.3000000000000003\n"));
  EXPECT_EQ(t.edges[0].w, 1.1);
  EXPECT_EQ(format_trace(parse_trace(std::string_view(format_trace(t)))), format_trace(t));
}

std::size_t error_line(const std::string& text) {
  try {
    parse_trace(std::string_view(text));
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

TEST(Trace, ParseErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("e 0 1 1\n"), 1u);
  EXPECT_EQ(error_line("n 0 w 1\n"), 1u);
  EXPECT_EQ(error_line("n 3 w 4\ne 0 3 1\n"), 2u);
  EXPECT_EQ(error_line("n 3 w 4\ne 0 1 0.5\n"), 2u);
  EXPECT_EQ(error_line("n 3 w 4\ne 0 1 5\n"), 2u);
  EXPECT_EQ(error_line("n 3 w 4\ne 0 1 1\ne 1 0 2\n"), 3u);
  EXPECT_EQ(error_line("n 3 w 4\ne 0 0 1\n"), 2u);
  EXPECT_EQ(error_line("n 3 w 4\ne 0 1 1\n# x\nd 1 2\n"), 4u);
  EXPECT_EQ(error_line("n 3 w 4\ne 0 1 2\ni 0 1 1\n"), 3u);
  EXPECT_EQ(error_line("n 3 w 4\ne 0 1 2\nq 0\ne 1 2 1\n"), 4u);
  EXPECT_EQ(error_line("n 3 w 4\nx 1\n"), 2u);
  EXPECT_EQ(error_line("n 3 w 4\nq\n"), 2u);
  EXPECT_EQ(error_line("n 3 w 4\nq 1x\n"), 2u);
  EXPECT_THROW(parse_trace(std::string_view("")), ParseError);
}

TEST(Generate, Deterministic) {
  GenerateParams p;
  p.n = 10;
  p.m = 20;
  p.w_max = 16;
  p.seed = 7;
  p.deletions = 20;
  const std::string a = format_trace(generate_trace(p));
  EXPECT_EQ(a, format_trace(generate_trace(p)));
  p.seed = 8;
  EXPECT_NE(a, format_trace(generate_trace(p)));
  UpdateTrace t = parse_trace(std::string_view(a));
  EXPECT_EQ(t.edges.size(), 20u);
  for (const auto& e : t.edges) {
    EXPECT_GE(e.w, 1.0);
    EXPECT_LE(e.w, 16.0);
  }
}

TEST(Generate, QueryInterval) {
  GenerateParams p;
  p.n = 20;
  p.m = 40;
  p.deletions = 30;
  p.increase_rate = 0.0;
  p.query_every = 3;
  UpdateTrace t = generate_trace(p);
  std::size_t queries = 0;
  for (const auto& op : t.ops) queries += std::holds_alternative<QueryDistance>(op);
  EXPECT_EQ(queries, 10u);
  EXPECT_EQ(t.ops.size(), 40u);
}

TEST(Generate, HeavyDenseIsMostlyHeavy) {
  GenerateParams p;
  p.kind = TraceKind::kHeavyDense;
  p.n = 100;
  p.m = 0;
  p.w_max = 10;
  UpdateTrace t = generate_trace(p);
  std::size_t heavy = 0;
  for (const auto& e : t.edges) heavy += e.w >= std::sqrt(100.0);
  EXPECT_GE(static_cast<double>(heavy), 0.9 * static_cast<double>(t.edges.size()));
  std::vector<int> unit_degree(100, 0);
  for (const auto& e : t.edges) {
    if (e.w == 1.0) {
      ++unit_degree[e.u];
      ++unit_degree[e.v];
    }
  }
  for (int d : unit_degree) EXPECT_LE(d, 1);
  p.w_max = 9;
  EXPECT_THROW(generate_trace(p), InvalidArgument);
}

TEST(Generate, PathPlusCliques) {
  GenerateParams p;
  p.kind = TraceKind::kPathPlusCliques;
  p.n = 40;
  p.m = 0;
  p.w_max = 50;
  p.deletions = 10;
  UpdateTrace t = generate_trace(p);
  // The first deletions walk the path away from the source.
  std::size_t k = 0;
  for (const auto& op : t.ops) {
    if (const auto* d = std::get_if<DeleteEdge>(&op)) {
      EXPECT_EQ(d->key, EdgeKey::of(static_cast<VertexId>(k), static_cast<VertexId>(k + 1)));
      ++k;
    }
  }
  EXPECT_EQ(k, 10u);
  EXPECT_NO_THROW(parse_trace(std::string_view(format_trace(t))));
}

TEST(Generate, InfeasibleParameters) {
  GenerateParams p;
  p.n = 10;
  p.m = 20;
  p.deletions = 21;
  EXPECT_THROW(generate_trace(p), InvalidArgument);
  p.deletions = 0;
  p.m = 46;
  EXPECT_THROW(generate_trace(p), InvalidArgument);
  p.m = 10;
  p.n = 1;
  EXPECT_THROW(generate_trace(p), InvalidArgument);
}

UpdateTrace sample(std::size_t n, std::size_t m, std::uint64_t seed) {
  GenerateParams p;
  p.n = n;
  p.m = m;
  p.w_max = 32;
  p.seed = seed;
  p.deletions = m;
  return generate_trace(p);
}

TEST(Replay, NaiveAgainstItself) {
  ReplayOptions opt;
  opt.algo = Algo::kDijkstraNaive;
  opt.verify = true;
  RunReport r = replay(sample(30, 80, 3), opt);
  EXPECT_TRUE(r.ok());
  ASSERT_FALSE(r.rows.empty());
  for (const auto& row : r.rows) EXPECT_EQ(row.ratio, 1.0);
}

TEST(Replay, EsExactMatchesDijkstra) {
  ReplayOptions opt;
  opt.algo = Algo::kEsExact;
  opt.verify = true;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    RunReport r = replay(sample(30, 80, seed), opt);
    EXPECT_TRUE(r.ok()) << r.violations.front();
    for (const auto& row : r.rows) EXPECT_EQ(row.ratio, 1.0);
  }
}

TEST(Replay, EsExactRejectsFractionalWeights) {
  ReplayOptions opt;
  opt.algo = Algo::kEsExact;
  EXPECT_THROW(replay(parse_trace(std::string_view("n 2 w 4\ne 0 1 1.5\n")), opt), NonIntegerWeight);
}

TEST(Replay, LayeredWithinGuarantee) {
  ReplayOptions opt;
  opt.algo = Algo::kWsesLayered;
  opt.epsilon = Rational::parse("0.2");
  opt.verify = true;
  RunReport r = replay(sample(50, 150, 11), opt);
  EXPECT_TRUE(r.ok()) << r.violations.front();
  for (const auto& row : r.rows) {
    ASSERT_TRUE(row.ratio.has_value());
    EXPECT_GE(*row.ratio, 1.0);
    EXPECT_LE(*row.ratio, 1.0 + 30 * 0.2);
  }
}

TEST(Replay, Deterministic) {
  UpdateTrace t = sample(25, 60, 5);
  ReplayOptions opt;
  opt.verify = true;
  RunReport a = replay(t, opt);
  RunReport b = replay(t, opt);
  std::ostringstream ra, rb, sa, sb;
  write_rows_csv(ra, a);
  write_rows_csv(rb, b);
  EXPECT_EQ(ra.str(), rb.str());
  EXPECT_EQ(a.counters, b.counters);
  write_stats_csv(sa, a);
  EXPECT_EQ(sa.str().rfind("counter,value\nupdates,", 0), 0u);
  EXPECT_EQ(ra.str().rfind("op_index,vertex,reported,oracle,ratio\n", 0), 0u);
}

TEST(Replay, DisconnectedRowsAgree) {
  UpdateTrace t = parse_trace(std::string_view("n 3 w 4\ne 0 1 1\ne 1 2 1\nq 2\nd 0 1\nq 1\n"));
  ReplayOptions opt;
  opt.algo = Algo::kDijkstraNaive;
  opt.verify = true;
  RunReport r = replay(t, opt);
  EXPECT_TRUE(r.ok());
  ASSERT_EQ(r.rows.size(), 2u);
  EXPECT_EQ(r.rows[0].reported, 2.0);
  EXPECT_EQ(r.rows[1].reported, kInfinity);
  EXPECT_EQ(r.rows[1].ratio, 1.0);
}

}  // namespace
}  // namespace desssp
