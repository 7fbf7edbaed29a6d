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


// desssp generate ... > trace.txt
// desssp replay --trace trace.txt --algo wses-layered --epsilon 1/5 --verify --stats stats.csv
//
// Exit status: 0 fine, 1 a verified query broke its guarantee, 2 bad input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "desssp/trace.hpp"

namespace {

int generate(const std::string& kind, const desssp::GenerateParams& base, const std::string& out_path) {
  desssp::GenerateParams p = base;
  p.kind = desssp::parse_trace_kind(kind);
  desssp::UpdateTrace t = desssp::generate_trace(p);
  if (out_path.empty() || out_path == "-") {
    desssp::write_trace(std::cout, t);
  } else {
    std::ofstream out(out_path);
    if (!out) throw desssp::InvalidArgument("cannot write " + out_path);
    desssp::write_trace(out, t);
  }
  return 0;
}

int replay(const std::string& trace_path, const std::string& algo, const std::string& eps, bool verify,
           const std::string& stats_path, const std::string& out_path) {
  std::ifstream in(trace_path);
  if (!in) throw desssp::InvalidArgument("cannot read " + trace_path);
  desssp::UpdateTrace t = desssp::parse_trace(in);
  desssp::ReplayOptions opt;
  opt.algo = desssp::parse_algo(algo);
  opt.epsilon = desssp::Rational::parse(eps);
  opt.verify = verify;
  desssp::RunReport r = desssp::replay(t, opt);

  if (out_path.empty() || out_path == "-") {
    desssp::write_rows_csv(std::cout, r);
  } else {
    std::ofstream out(out_path);
    if (!out) throw desssp::InvalidArgument("cannot write " + out_path);
    desssp::write_rows_csv(out, r);
  }
  if (!stats_path.empty()) {
    std::ofstream out(stats_path);
    if (!out) throw desssp::InvalidArgument("cannot write " + stats_path);
    desssp::write_stats_csv(out, r);
  }
  for (const auto& v : r.violations) std::cerr << "violation: " << v << "\n";
  return r.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decremental approximate single-source shortest paths"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("generate", "write a random update trace");
  std::string kind = "uniform-random";
  std::string gen_out;
  desssp::GenerateParams params;
  gen->add_option("--kind", kind, "uniform-random, heavy-dense or path-plus-cliques")->capture_default_str();
  gen->add_option("-n,--vertices", params.n, "vertex count")->capture_default_str();
  gen->add_option("-m,--edges", params.m, "edge count, 0 for the kind's default")->capture_default_str();
  gen->add_option("-w,--max-weight", params.w_max, "largest weight W")->capture_default_str();
  gen->add_option("--seed", params.seed, "random seed")->capture_default_str();
  gen->add_option("--deletions", params.deletions, "number of deletions")->capture_default_str();
  gen->add_option("--increase-rate", params.increase_rate, "chance of an increase before each deletion")
      ->capture_default_str();
  gen->add_option("--query-every", params.query_every, "updates between queries")->capture_default_str();
  gen->add_option("-o,--out", gen_out, "output path, stdout by default");

  auto* rep = app.add_subcommand("replay", "run a trace through one algorithm");
  std::string trace_path;
  std::string algo = "wses-layered";
  std::string eps = "1/5";
  bool verify = false;
  std::string stats_path;
  std::string rep_out;
  std::uint64_t unused_seed = 0;
  rep->add_option("--trace", trace_path, "trace file")->required();
  rep->add_option("--algo", algo, "dijkstra-naive, es-exact or wses-layered")->capture_default_str();
  rep->add_option("--epsilon", eps, "p/q or a decimal")->capture_default_str();
  rep->add_flag("--verify", verify, "compare every query with Dijkstra");
  rep->add_option("--stats", stats_path, "write counters as counter,value CSV");
  rep->add_option("--seed", unused_seed, "accepted for symmetry; replay is deterministic");
  rep->add_option("-o,--out", rep_out, "query CSV path, stdout by default");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*gen) return generate(kind, params, gen_out);
    return replay(trace_path, algo, eps, verify, stats_path, rep_out);
  } catch (const desssp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
