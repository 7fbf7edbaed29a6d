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


// Text traces: a header, the initial edges, then deletions, weight increases
// and queries, one per line.
//
//   n <n> w <W>
//   e <u> <v> <w>
//   d <u> <v>
//   i <u> <v> <new_w>
//   q <v>
//
// '#' starts a comment. Edges come before the first operation.

#pragma once

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <istream>
#include <memory>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "desssp/errors.hpp"
#include "desssp/es_tree.hpp"
#include "desssp/graph.hpp"
#include "desssp/layered.hpp"
#include "desssp/oracle.hpp"
#include "desssp/rational.hpp"

namespace desssp {

struct UpdateTrace {
  std::size_t n = 0;
  double w_max = 1.0;
  std::vector<RealWeightedEdge> edges;
  std::vector<UpdateEvent> ops;

  DynamicGraph initial_graph() const {
    DynamicGraph g(n);
    for (const auto& e : edges) g.add_edge(e.u, e.v, e.w);
    return g;
  }
};

/// Shortest text that reads back as the same double.
inline std::string format_number(double x) {
  if (x == kInfinity) return "inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

namespace trace_detail {

inline std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline VertexId vertex(std::string_view s, std::size_t n, std::size_t line) {
  VertexId v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw ParseError(line, "bad vertex '" + std::string(s) + "'");
  }
  if (v >= n) throw ParseError(line, "vertex " + std::to_string(v) + " out of range");
  return v;
}

inline double weight(std::string_view s, double w_max, std::size_t line) {
  double w = 0.0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), w);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size() || !std::isfinite(w)) {
    throw ParseError(line, "bad weight '" + std::string(s) + "'");
  }
  if (w < 1.0) throw ParseError(line, "weight below 1");
  if (w > w_max) throw ParseError(line, "weight above the declared maximum");
  return w;
}

}  // namespace trace_detail

/// Parses and replays the trace onto a scratch graph, so a trace that parses
/// also replays without errors.
inline UpdateTrace parse_trace(std::istream& in) {
  using namespace trace_detail;
  UpdateTrace t;
  std::optional<DynamicGraph> g;
  std::string raw;
  std::size_t line = 0;
  bool header = false;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view text(raw);
    if (auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
    auto tok = split(text);
    if (tok.empty()) continue;
    const std::string_view op = tok[0];
    auto want = [&](std::size_t k) {
      if (tok.size() != k) throw ParseError(line, "'" + std::string(op) + "' takes " + std::to_string(k - 1) + " fields");
    };
    if (!header) {
      if (op != "n" || tok.size() != 4 || tok[2] != "w") throw ParseError(line, "expected 'n <n> w <W>'");
      std::size_t n = 0;
      auto res = std::from_chars(tok[1].data(), tok[1].data() + tok[1].size(), n);
      if (res.ec != std::errc() || res.ptr != tok[1].data() + tok[1].size() || n == 0) {
        throw ParseError(line, "bad vertex count");
      }
      t.n = n;
      t.w_max = weight(tok[3], kInfinity, line);
      g.emplace(n);
      header = true;
      continue;
    }
    try {
      if (op == "e") {
        want(4);
        if (!t.ops.empty()) throw ParseError(line, "edge after the first operation");
        RealWeightedEdge e{vertex(tok[1], t.n, line), vertex(tok[2], t.n, line), weight(tok[3], t.w_max, line)};
        g->add_edge(e.u, e.v, e.w);
        t.edges.push_back(e);
      } else if (op == "d") {
        want(3);
        DeleteEdge ev{EdgeKey::of(vertex(tok[1], t.n, line), vertex(tok[2], t.n, line))};
        g->apply(ev);
        t.ops.emplace_back(ev);
      } else if (op == "i") {
        want(4);
        IncreaseWeight ev{EdgeKey::of(vertex(tok[1], t.n, line), vertex(tok[2], t.n, line)),
                          weight(tok[3], t.w_max, line)};
        g->apply(ev);
        t.ops.emplace_back(ev);
      } else if (op == "q") {
        want(2);
        t.ops.emplace_back(QueryDistance{vertex(tok[1], t.n, line)});
      } else {
        throw ParseError(line, "unknown record '" + std::string(op) + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(line, e.what());
    }
  }
  if (!header) throw ParseError(line, "missing header");
  return t;
}

inline UpdateTrace parse_trace(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_trace(in);
}

inline void write_trace(std::ostream& out, const UpdateTrace& t) {
  out << "n " << t.n << " w " << format_number(t.w_max) << "\n";
  for (const auto& e : t.edges) out << "e " << e.u << " " << e.v << " " << format_number(e.w) << "\n";
  for (const auto& op : t.ops) {
    std::visit(
        [&](const auto& ev) {
          using T = std::decay_t<decltype(ev)>;
          if constexpr (std::is_same_v<T, DeleteEdge>) {
            out << "d " << ev.key.u << " " << ev.key.v << "\n";
          } else if constexpr (std::is_same_v<T, IncreaseWeight>) {
            out << "i " << ev.key.u << " " << ev.key.v << " " << format_number(ev.new_weight) << "\n";
          } else {
            out << "q " << ev.vertex << "\n";
          }
        },
        op);
  }
}

inline std::string format_trace(const UpdateTrace& t) {
  std::ostringstream out;
  write_trace(out, t);
  return out.str();
}

// ---------------------------------------------------------------------------
// Generators

enum class TraceKind { kUniformRandom, kHeavyDense, kPathPlusCliques };

inline TraceKind parse_trace_kind(std::string_view s) {
  if (s == "uniform-random") return TraceKind::kUniformRandom;
  if (s == "heavy-dense") return TraceKind::kHeavyDense;
  if (s == "path-plus-cliques") return TraceKind::kPathPlusCliques;
  throw InvalidArgument("unknown trace kind '" + std::string(s) + "'");
}

struct GenerateParams {
  TraceKind kind = TraceKind::kUniformRandom;
  std::size_t n = 10;
  std::size_t m = 20;  // 0: the kind's natural size
  std::int64_t w_max = 16;
  std::uint64_t seed = 1;
  std::size_t deletions = 0;
  double increase_rate = 0.5;  // chance of a weight increase before each deletion
  std::size_t query_every = 1;  // one query after every k updates
};

namespace trace_detail {

using Rng = std::mt19937_64;

inline std::uint64_t below(Rng& rng, std::uint64_t k) {
  return std::uniform_int_distribution<std::uint64_t>(0, k - 1)(rng);
}

// Adds a fresh random pair of weight w; false when the pair already exists.
inline bool try_add(std::vector<RealWeightedEdge>& edges, std::vector<char>& used, std::size_t n,
                    VertexId a, VertexId b, double w) {
  if (a == b) return false;
  EdgeKey k = EdgeKey::of(a, b);
  std::size_t slot = static_cast<std::size_t>(k.u) * n + k.v;
  if (used[slot]) return false;
  used[slot] = 1;
  edges.push_back({k.u, k.v, w});
  return true;
}

inline void fill_random(std::vector<RealWeightedEdge>& edges, std::vector<char>& used, std::size_t n,
                        std::size_t target, Rng& rng, auto&& weight_of) {
  while (edges.size() < target) {
    auto a = static_cast<VertexId>(below(rng, n));
    auto b = static_cast<VertexId>(below(rng, n));
    if (try_add(edges, used, n, a, b, 0.0)) edges.back().w = weight_of();
  }
}

}  // namespace trace_detail

/// Deterministic for a given parameter set.
inline UpdateTrace generate_trace(const GenerateParams& p) {
  using namespace trace_detail;
  if (p.n < 2) throw InvalidArgument("need at least 2 vertices");
  if (p.w_max < 1) throw InvalidArgument("W must be >= 1");
  if (p.query_every == 0) throw InvalidArgument("query interval must be >= 1");
  if (!(p.increase_rate >= 0.0 && p.increase_rate <= 1.0)) throw InvalidArgument("increase rate must lie in [0, 1]");
  const std::size_t n = p.n;
  const std::size_t max_m = n * (n - 1) / 2;
  Rng rng(p.seed);
  UpdateTrace t;
  t.n = n;
  t.w_max = static_cast<double>(p.w_max);
  std::vector<char> used(n * n, 0);
  std::vector<std::size_t> first_deleted;  // edges deleted before the random rest

  switch (p.kind) {
    case TraceKind::kUniformRandom: {
      std::size_t m = p.m == 0 ? std::min(max_m, 2 * n) : p.m;
      if (m > max_m) throw InvalidArgument("more edges than vertex pairs");
      fill_random(t.edges, used, n, m, rng,
                  [&] { return static_cast<double>(1 + below(rng, static_cast<std::uint64_t>(p.w_max))); });
      break;
    }
    case TraceKind::kHeavyDense: {
      // A perfect matching of weight-1 edges, the rest weight ceil(sqrt n).
      const auto root = static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<double>(n))));
      if (p.w_max < root) throw InvalidArgument("heavy-dense needs W >= ceil(sqrt(n))");
      std::vector<VertexId> perm(n);
      for (VertexId v = 0; v < n; ++v) perm[v] = v;
      std::shuffle(perm.begin(), perm.end(), rng);
      for (std::size_t k = 0; k + 1 < n; k += 2) try_add(t.edges, used, n, perm[k], perm[k + 1], 1.0);
      const std::size_t light = t.edges.size();
      std::size_t m = p.m == 0 ? light + n * static_cast<std::size_t>(root) / 2 : p.m;
      if (m > max_m) throw InvalidArgument("more edges than vertex pairs");
      if (m < light) throw InvalidArgument("heavy-dense needs m >= n/2");
      fill_random(t.edges, used, n, m, rng, [&] { return static_cast<double>(root); });
      break;
    }
    case TraceKind::kPathPlusCliques: {
      // A unit path from vertex 0 through the first half, every other vertex
      // in a clique hanging off one path vertex, and W-weight shortcuts from
      // the source into each clique. Deleting the path front to back makes
      // whole cliques climb again and again.
      const std::size_t path = std::max<std::size_t>(2, n / 2);
      const std::size_t rest = n - path;
      const auto c = std::max<std::size_t>(2, static_cast<std::size_t>(std::sqrt(static_cast<double>(rest))));
      for (VertexId v = 0; v + 1 < path; ++v) {
        try_add(t.edges, used, n, v, v + 1, 1.0);
        first_deleted.push_back(t.edges.size() - 1);
      }
      for (std::size_t start = path; start < n; start += c) {
        const std::size_t end = std::min(n, start + c);
        auto hook = static_cast<VertexId>(1 + (start - path) / c % (path - 1));
        for (std::size_t a = start; a < end; ++a) {
          for (std::size_t b = a + 1; b < end; ++b) {
            try_add(t.edges, used, n, static_cast<VertexId>(a), static_cast<VertexId>(b), 1.0);
          }
        }
        try_add(t.edges, used, n, hook, static_cast<VertexId>(start), 1.0);
        try_add(t.edges, used, n, 0, static_cast<VertexId>(end - 1), static_cast<double>(p.w_max));
      }
      const std::size_t base = t.edges.size();
      std::size_t m = p.m == 0 ? base : p.m;
      if (m > max_m) throw InvalidArgument("more edges than vertex pairs");
      if (m < base) throw InvalidArgument("path-plus-cliques needs m >= " + std::to_string(base));
      fill_random(t.edges, used, n, m, rng, [&] { return static_cast<double>(p.w_max); });
      break;
    }
  }

  const std::size_t m = t.edges.size();
  if (p.deletions > m) throw InvalidArgument("more deletions than edges");

  std::vector<std::size_t> order;
  std::vector<char> taken(m, 0);
  for (std::size_t k : first_deleted) {
    order.push_back(k);
    taken[k] = 1;
  }
  std::vector<std::size_t> rest;
  for (std::size_t k = 0; k < m; ++k) {
    if (!taken[k]) rest.push_back(k);
  }
  std::shuffle(rest.begin(), rest.end(), rng);
  order.insert(order.end(), rest.begin(), rest.end());
  order.resize(p.deletions);

  std::vector<double> weight(m);
  std::vector<char> alive(m, 1);
  for (std::size_t k = 0; k < m; ++k) weight[k] = t.edges[k].w;
  std::vector<std::size_t> live(m);
  for (std::size_t k = 0; k < m; ++k) live[k] = k;

  std::size_t updates = 0;
  auto after_update = [&] {
    if (++updates % p.query_every == 0) t.ops.emplace_back(QueryDistance{static_cast<VertexId>(below(rng, n))});
  };
  std::bernoulli_distribution coin(p.increase_rate);
  for (std::size_t victim : order) {
    if (coin(rng)) {
      std::size_t k = live[below(rng, live.size())];
      if (weight[k] < t.w_max) {
        auto lo = static_cast<std::uint64_t>(weight[k]) + 1;
        auto hi = static_cast<std::uint64_t>(t.w_max);
        weight[k] = static_cast<double>(lo + below(rng, hi - lo + 1));
        t.ops.emplace_back(IncreaseWeight{EdgeKey::of(t.edges[k].u, t.edges[k].v), weight[k]});
        after_update();
      }
    }
    t.ops.emplace_back(DeleteEdge{EdgeKey::of(t.edges[victim].u, t.edges[victim].v)});
    alive[victim] = 0;
    live.erase(std::find(live.begin(), live.end(), victim));
    after_update();
  }
  return t;
}

// ---------------------------------------------------------------------------
// Replay

enum class Algo { kDijkstraNaive, kEsExact, kWsesLayered };

inline Algo parse_algo(std::string_view s) {
  if (s == "dijkstra-naive") return Algo::kDijkstraNaive;
  if (s == "es-exact") return Algo::kEsExact;
  if (s == "wses-layered") return Algo::kWsesLayered;
  throw InvalidArgument("unknown algorithm '" + std::string(s) + "'");
}

struct ReplayOptions {
  Algo algo = Algo::kWsesLayered;
  Rational epsilon = Rational(1, 5);
  bool verify = false;
  VertexId source = 0;
};

struct QueryRow {
  std::size_t op_index = 0;
  VertexId vertex = 0;
  double reported = 0.0;
  std::optional<double> oracle;
  std::optional<double> ratio;
};

struct RunReport {
  std::vector<QueryRow> rows;
  std::vector<std::pair<std::string, std::uint64_t>> counters;
  std::vector<std::pair<std::string, double>> timings_ms;  // per phase
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

namespace trace_detail {

inline bool integral(double w) { return std::floor(w) == w && w < 9.0e15; }

// Answers queries for one algorithm; only the layered system reports a
// rational answer.
class Runner {
 public:
  virtual ~Runner() = default;
  virtual void apply(const UpdateEvent& ev) = 0;
  virtual double query(VertexId v) = 0;
  virtual std::optional<Rational> query_exact(VertexId) { return std::nullopt; }
  virtual void counters(RunReport&) const {}
};

class NaiveRunner : public Runner {
 public:
  NaiveRunner(const UpdateTrace& t, VertexId s) : g_(t.initial_graph()), s_(s) {}
  void apply(const UpdateEvent& ev) override { g_.apply(ev); }
  double query(VertexId v) override { return oracle::dijkstra(g_, s_)[v]; }

 private:
  DynamicGraph g_;
  VertexId s_;
};

class EsRunner : public Runner {
 public:
  EsRunner(const UpdateTrace& t, VertexId s) : tree_(make(t, s)) {}
  void apply(const UpdateEvent& ev) override {
    if (const auto* d = std::get_if<DeleteEdge>(&ev)) {
      tree_.erase(d->key.u, d->key.v);
    } else if (const auto* inc = std::get_if<IncreaseWeight>(&ev)) {
      if (!integral(inc->new_weight)) throw NonIntegerWeight("es-exact needs integer weights");
      tree_.increase_weight(inc->key.u, inc->key.v, static_cast<Label>(inc->new_weight));
    }
  }
  double query(VertexId v) override {
    Label l = tree_.label(v);
    return l == kUnreachable ? kInfinity : static_cast<double>(l);
  }
  void counters(RunReport& r) const override {
    std::uint64_t raises = 0;
    for (auto x : tree_.stats().label_increases) raises += x;
    r.counters.emplace_back("es_label_increases", raises);
    r.counters.emplace_back("es_edge_touches", tree_.stats().edge_touches);
  }

 private:
  static EsTree make(const UpdateTrace& t, VertexId s) {
    std::vector<WeightedEdge> edges;
    for (const auto& e : t.edges) {
      if (!integral(e.w)) throw NonIntegerWeight("es-exact needs integer weights");
      edges.push_back({e.u, e.v, static_cast<Label>(e.w)});
    }
    // n W bounds every finite distance.
    auto depth = static_cast<Label>(static_cast<double>(t.n) * t.w_max);
    return EsTree(t.n, edges, s, std::max<Label>(depth, 1));
  }

  EsTree tree_;
};

class LayeredRunner : public Runner {
 public:
  LayeredRunner(const UpdateTrace& t, VertexId s, const Rational& eps)
      : sys_(t.initial_graph(), s, eps, t.w_max) {}
  void apply(const UpdateEvent& ev) override { sys_.apply(ev); }
  double query(VertexId v) override { return sys_.query(v); }
  std::optional<Rational> query_exact(VertexId v) override {
    return sys_.query_exact(v);
  }
  void counters(RunReport& r) const override {
    std::uint64_t charge = 0;
    std::uint64_t work = 0;
    std::uint64_t raises = 0;
    std::uint64_t half = 0;
    std::uint64_t repoint = 0;
    HdtConnectivity::Stats conn;
    std::uint64_t conn_work = 0;
    std::vector<std::uint64_t> light;
    for (const auto& layer : sys_.layers()) {
      auto rep = layer.wses().charge_report();
      charge += rep.edge_total;
      work += rep.work;
      for (auto x : rep.vertex_raises) raises += x;
      const auto& c = layer.threshold().counters();
      half += c.half_edge_insertions;
      repoint += c.repointings;
      if (light.size() < c.light_insertions_by_level.size()) light.resize(c.light_insertions_by_level.size());
      for (std::size_t i = 0; i < c.light_insertions_by_level.size(); ++i) light[i] += c.light_insertions_by_level[i];
      const auto& cs = layer.threshold().connectivity().stats();
      conn.inserts += cs.inserts;
      conn.deletes += cs.deletes;
      conn.level_raises += cs.level_raises;
      conn.replacement_scans += cs.replacement_scans;
      conn.splits += cs.splits;
      conn_work += layer.threshold().connectivity().work();
    }
    r.counters.emplace_back("layers", sys_.layers().size());
    r.counters.emplace_back("wses_edge_charge_total", charge);
    r.counters.emplace_back("wses_vertex_raises", raises);
    r.counters.emplace_back("wses_work", work);
    r.counters.emplace_back("half_edge_insertions", half);
    r.counters.emplace_back("repointings", repoint);
    for (std::size_t i = 0; i < light.size(); ++i) {
      r.counters.emplace_back("light_insertions_level_" + std::to_string(i), light[i]);
    }
    r.counters.emplace_back("connectivity_inserts", conn.inserts);
    r.counters.emplace_back("connectivity_deletes", conn.deletes);
    r.counters.emplace_back("connectivity_level_raises", conn.level_raises);
    r.counters.emplace_back("connectivity_replacement_scans", conn.replacement_scans);
    r.counters.emplace_back("connectivity_splits", conn.splits);
    r.counters.emplace_back("connectivity_work", conn_work);
  }

 private:
  LayeredSssp sys_;
};

}  // namespace trace_detail

/// Runs every operation; on a query records the answer and, with verify, the
/// Dijkstra answer and any broken guarantee.
inline RunReport replay(const UpdateTrace& t, const ReplayOptions& opt) {
  using namespace trace_detail;
  using Clock = std::chrono::steady_clock;
  auto ms = [](Clock::duration d) { return std::chrono::duration<double, std::milli>(d).count(); };
  if (opt.source >= t.n) throw InvalidArgument("source out of range");
  RunReport report;
  std::optional<DynamicGraph> shadow;
  if (opt.verify) shadow.emplace(t.initial_graph());

  auto t0 = Clock::now();
  std::unique_ptr<Runner> run;
  switch (opt.algo) {
    case Algo::kDijkstraNaive: run = std::make_unique<NaiveRunner>(t, opt.source); break;
    case Algo::kEsExact: run = std::make_unique<EsRunner>(t, opt.source); break;
    case Algo::kWsesLayered: run = std::make_unique<LayeredRunner>(t, opt.source, opt.epsilon); break;
  }
  Clock::duration update_time{};
  Clock::duration verify_time{};
  auto t1 = Clock::now();

  const Rational top = Rational(1) + Rational(30) * opt.epsilon;
  std::uint64_t updates = 0;
  for (std::size_t k = 0; k < t.ops.size(); ++k) {
    const UpdateEvent& ev = t.ops[k];
    const auto* q = std::get_if<QueryDistance>(&ev);
    if (!q) {
      auto a = Clock::now();
      run->apply(ev);
      update_time += Clock::now() - a;
      if (shadow) shadow->apply(ev);
      ++updates;
      continue;
    }
    QueryRow row;
    row.op_index = k;
    row.vertex = q->vertex;
    auto a = Clock::now();
    row.reported = run->query(q->vertex);
    update_time += Clock::now() - a;
    if (shadow) {
      auto b = Clock::now();
      const double truth = oracle::dijkstra(*shadow, opt.source)[q->vertex];
      row.oracle = truth;
      row.ratio = (row.reported == truth) ? 1.0 : row.reported / truth;
      std::string where = "op " + std::to_string(k) + " vertex " + std::to_string(q->vertex) + ": ";
      if (truth == kInfinity || row.reported == kInfinity) {
        if (truth != row.reported) report.violations.push_back(where + "reachability differs");
      } else if (opt.algo != Algo::kWsesLayered) {
        if (row.reported != truth) report.violations.push_back(where + "not exact");
      } else {
        Rational got = run->query_exact(q->vertex).value();
        Rational want = exact_rational(truth);
        if (got < want || got > top * want) report.violations.push_back(where + "ratio out of range");
      }
      verify_time += Clock::now() - b;
    }
    report.rows.push_back(row);
  }
  report.counters.emplace_back("updates", updates);
  report.counters.emplace_back("queries", report.rows.size());
  report.counters.emplace_back("violations", report.violations.size());
  run->counters(report);
  report.timings_ms.emplace_back("build", ms(t1 - t0));
  report.timings_ms.emplace_back("updates_and_queries", ms(update_time));
  report.timings_ms.emplace_back("verify", ms(verify_time));
  return report;
}

/// op_index,vertex,reported,oracle,ratio; oracle and ratio stay empty
/// without verification.
inline void write_rows_csv(std::ostream& out, const RunReport& r) {
  out << "op_index,vertex,reported,oracle,ratio\n";
  for (const auto& row : r.rows) {
    out << row.op_index << "," << row.vertex << "," << format_number(row.reported) << ",";
    if (row.oracle) out << format_number(*row.oracle);
    out << ",";
    if (row.ratio) out << format_number(*row.ratio);
    out << "\n";
  }
}

/// counter,value; timing rows are prefixed time_ms_ and come last.
inline void write_stats_csv(std::ostream& out, const RunReport& r) {
  out << "counter,value\n";
  for (const auto& [name, v] : r.counters) out << name << "," << v << "\n";
  for (const auto& [name, v] : r.timings_ms) out << "time_ms_" << name << "," << format_number(v) << "\n";
}

}  // namespace desssp
