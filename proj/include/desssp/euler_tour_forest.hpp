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
#include <random>
#include <utility>
#include <vector>

#include "desssp/graph.hpp"

namespace desssp {

/// Dynamic forest stored as Euler tours in randomized balanced search trees
/// (treaps with parent links).
///
/// Every vertex owns one node; every tree edge owns two arc nodes, one per
/// direction. A tree's tour starts at its root vertex node, and rerooting is
/// a rotation of the sequence. Each node carries a boolean mark whose
/// subtree-OR is maintained, so marked vertices or arcs of one tree can be
/// listed in time proportional to their number times the tree height.
class EulerTourForest {
 public:
  using NodeId = std::int32_t;
  static constexpr NodeId kNil = -1;

  struct ArcPair {
    NodeId forward = kNil;
    NodeId backward = kNil;
  };

  explicit EulerTourForest(std::size_t n, std::uint64_t seed = 0x9e3779b97f4a7c15ULL)
      : rng_(seed) {
    nodes_.reserve(3 * n);
    for (VertexId v = 0; v < n; ++v) {
      NodeId x = allocate();
      nodes_[x].vertex = v;
      update(x);
    }
    vertex_count_ = n;
  }

  std::size_t num_vertices() const { return vertex_count_; }

  NodeId vertex_node(VertexId v) const { return static_cast<NodeId>(v); }

  /// Root of the search tree holding v's tour; identifies v's tree until the
  /// next structural change.
  NodeId tree_of(VertexId v) const { return root(vertex_node(v)); }

  bool connected(VertexId u, VertexId v) const { return tree_of(u) == tree_of(v); }

  std::size_t tree_size(VertexId v) const { return nodes_[tree_of(v)].vsize; }

  VertexId tree_min(VertexId v) const { return nodes_[tree_of(v)].min_vertex; }

  /// Joins the trees of u and v with a new tree edge. Precondition: u and v
  /// are in different trees.
  ArcPair link(VertexId u, VertexId v, EdgeId payload) {
    NodeId tu = reroot(vertex_node(u));
    NodeId tv = reroot(vertex_node(v));
    ArcPair arcs{allocate(), allocate()};
    nodes_[arcs.forward].payload = payload;
    nodes_[arcs.backward].payload = payload;
    update(arcs.forward);
    update(arcs.backward);
    merge(merge(merge(tu, arcs.forward), tv), arcs.backward);
    return arcs;
  }

  /// Removes the tree edge owning the two arcs.
  void cut(ArcPair arcs) {
    NodeId a = arcs.forward;
    NodeId b = arcs.backward;
    NodeId r = root(a);
    std::size_t ia = index_of(a);
    std::size_t ib = index_of(b);
    if (ia > ib) {
      std::swap(a, b);
      std::swap(ia, ib);
    }
    auto [left, rest] = split(r, ia);
    auto [arc_a, rest2] = split(rest, 1);
    auto [middle, rest3] = split(rest2, ib - ia - 1);
    auto [arc_b, right] = split(rest3, 1);
    merge(left, right);
    (void)middle;
    release(arc_a);
    release(arc_b);
  }

  void set_mark(NodeId x, bool on) {
    if (nodes_[x].mark == on) return;
    nodes_[x].mark = on;
    for (NodeId y = x; y != kNil; y = nodes_[y].parent) {
      update(y);
      ++work_;
    }
  }

  bool mark(NodeId x) const { return nodes_[x].mark; }

  EdgeId payload(NodeId x) const { return nodes_[x].payload; }

  /// All marked nodes in the tree whose search-tree root is `tree_root`.
  std::vector<NodeId> marked_nodes(NodeId tree_root) const {
    std::vector<NodeId> out;
    std::vector<NodeId> stack;
    if (tree_root != kNil && nodes_[tree_root].any_mark) stack.push_back(tree_root);
    while (!stack.empty()) {
      NodeId x = stack.back();
      stack.pop_back();
      ++work_;
      const Node& nd = nodes_[x];
      if (nd.mark) out.push_back(x);
      if (nd.left != kNil && nodes_[nd.left].any_mark) stack.push_back(nd.left);
      if (nd.right != kNil && nodes_[nd.right].any_mark) stack.push_back(nd.right);
    }
    return out;
  }

  /// Vertices of the tree whose search-tree root is `tree_root`.
  std::vector<VertexId> vertices(NodeId tree_root) const {
    std::vector<VertexId> out;
    std::vector<NodeId> stack;
    if (tree_root != kNil) stack.push_back(tree_root);
    while (!stack.empty()) {
      NodeId x = stack.back();
      stack.pop_back();
      ++work_;
      const Node& nd = nodes_[x];
      if (nd.vertex != kNoVertex) out.push_back(nd.vertex);
      if (nd.left != kNil) stack.push_back(nd.left);
      if (nd.right != kNil) stack.push_back(nd.right);
    }
    return out;
  }

  bool is_vertex_node(NodeId x) const { return nodes_[x].vertex != kNoVertex; }
  VertexId node_vertex(NodeId x) const { return nodes_[x].vertex; }

  std::size_t size_of_root(NodeId r) const { return nodes_[r].vsize; }

  /// Elementary node visits, for amortized-cost audits.
  std::uint64_t work() const { return work_; }

  /// Checks that every tour is a well-formed sequence: aggregates match,
  /// parent links are consistent and heap order holds.
  bool audit() const {
    for (NodeId x = 0; x < static_cast<NodeId>(nodes_.size()); ++x) {
      if (nodes_[x].free) continue;
      const Node& nd = nodes_[x];
      std::uint32_t count = 1;
      std::uint32_t vsize = nd.vertex != kNoVertex ? 1 : 0;
      for (NodeId c : {nd.left, nd.right}) {
        if (c == kNil) continue;
        if (nodes_[c].parent != x || nodes_[c].priority > nd.priority) return false;
        count += nodes_[c].count;
        vsize += nodes_[c].vsize;
      }
      if (count != nd.count || vsize != nd.vsize) return false;
    }
    return true;
  }

 private:
  struct Node {
    NodeId left = kNil;
    NodeId right = kNil;
    NodeId parent = kNil;
    std::uint32_t priority = 0;
    std::uint32_t count = 1;
    std::uint32_t vsize = 0;
    VertexId vertex = kNoVertex;
    VertexId min_vertex = kNoVertex;
    EdgeId payload = kNoEdge;
    bool mark = false;
    bool any_mark = false;
    bool free = false;
  };

  NodeId allocate() {
    NodeId x;
    if (!free_list_.empty()) {
      x = free_list_.back();
      free_list_.pop_back();
      nodes_[x] = Node{};
    } else {
      x = static_cast<NodeId>(nodes_.size());
      nodes_.emplace_back();
    }
    nodes_[x].priority = static_cast<std::uint32_t>(rng_());
    return x;
  }

  void release(NodeId x) {
    nodes_[x] = Node{};
    nodes_[x].free = true;
    free_list_.push_back(x);
  }

  void update(NodeId x) {
    Node& nd = nodes_[x];
    nd.count = 1;
    nd.vsize = nd.vertex != kNoVertex ? 1 : 0;
    nd.min_vertex = nd.vertex;
    nd.any_mark = nd.mark;
    for (NodeId c : {nd.left, nd.right}) {
      if (c == kNil) continue;
      const Node& cn = nodes_[c];
      nd.count += cn.count;
      nd.vsize += cn.vsize;
      nd.min_vertex = std::min(nd.min_vertex, cn.min_vertex);
      nd.any_mark = nd.any_mark || cn.any_mark;
    }
  }

  NodeId root(NodeId x) const {
    while (nodes_[x].parent != kNil) {
      x = nodes_[x].parent;
      ++work_;
    }
    return x;
  }

  std::size_t index_of(NodeId x) const {
    std::size_t idx = nodes_[x].left == kNil ? 0 : nodes_[nodes_[x].left].count;
    while (nodes_[x].parent != kNil) {
      NodeId p = nodes_[x].parent;
      if (nodes_[p].right == x) {
        idx += 1 + (nodes_[p].left == kNil ? 0 : nodes_[nodes_[p].left].count);
      }
      x = p;
      ++work_;
    }
    return idx;
  }

  NodeId merge(NodeId a, NodeId b) {
    ++work_;
    if (a == kNil) return b;
    if (b == kNil) return a;
    if (nodes_[a].priority > nodes_[b].priority) {
      NodeId r = merge(nodes_[a].right, b);
      nodes_[a].right = r;
      nodes_[r].parent = a;
      update(a);
      nodes_[a].parent = kNil;
      return a;
    }
    NodeId l = merge(a, nodes_[b].left);
    nodes_[b].left = l;
    nodes_[l].parent = b;
    update(b);
    nodes_[b].parent = kNil;
    return b;
  }

  /// First k nodes of the sequence rooted at t, and the rest.
  std::pair<NodeId, NodeId> split(NodeId t, std::size_t k) {
    ++work_;
    if (t == kNil) return {kNil, kNil};
    Node& nd = nodes_[t];
    std::size_t left_count = nd.left == kNil ? 0 : nodes_[nd.left].count;
    if (k <= left_count) {
      auto [a, b] = split(nd.left, k);
      nodes_[t].left = b;
      if (b != kNil) nodes_[b].parent = t;
      update(t);
      nodes_[t].parent = kNil;
      if (a != kNil) nodes_[a].parent = kNil;
      return {a, t};
    }
    auto [a, b] = split(nd.right, k - left_count - 1);
    nodes_[t].right = a;
    if (a != kNil) nodes_[a].parent = t;
    update(t);
    nodes_[t].parent = kNil;
    if (b != kNil) nodes_[b].parent = kNil;
    return {t, b};
  }

  /// Rotates the tour containing x so that it starts at x; returns the root.
  NodeId reroot(NodeId x) {
    NodeId r = root(x);
    std::size_t k = index_of(x);
    if (k == 0) return r;
    auto [front, back] = split(r, k);
    return merge(back, front);
  }

  std::vector<Node> nodes_;
  std::vector<NodeId> free_list_;
  std::size_t vertex_count_ = 0;
  std::mt19937 rng_;
  mutable std::uint64_t work_ = 0;
};

}  // namespace desssp
