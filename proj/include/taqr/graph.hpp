// Copyright 2026 taqr contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace taqr {

// Undirected graph over levels 0..dim-1.  Nodes are qudit levels, edges are
// hardware-allowed transitions; optional positive weights model per-transition
// noise and steer pivot selection.
class TransitionGraph {
 public:
  TransitionGraph() = default;
  TransitionGraph(int dim, const std::vector<std::pair<int, int>>& edges,
                  const std::map<std::pair<int, int>, double>& weights = {});

  int dim() const { return dim_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int level) const { return adjacency_[level]; }
  bool has_edge(int i, int j) const;
  double weight(int i, int j) const;  // 1.0 unless specified

 private:
  int dim_ = 0;
  std::vector<std::pair<int, int>> edges_;  // canonical (i < j), sorted, unique
  std::map<std::pair<int, int>, double> weights_;
  std::vector<std::vector<int>> adjacency_;
};

// line:<d> | star:<d> | bipartite:<d>:<p> with 1 ≤ p < d.
//   line      edges (n, n+1)
//   star      edges (0, n)
//   bipartite all pairs across {0..p-1} × {p..d-1}
TransitionGraph preset_graph(const std::string& spec);

// True iff the subgraph induced by `active` is connected (trivially true for
// one or zero levels).
bool induced_connected(const TransitionGraph& g, const std::set<int>& active);

// Levels of `active` that are NOT articulation points of the induced subgraph,
// i.e. removing any one of them keeps the rest connected.  Never empty when
// |active| ≥ 2 and the induced subgraph is connected; throws when it is not.
std::set<int> removable_levels(const TransitionGraph& g,
                               const std::set<int>& active);

// Breadth-first layers over the induced subgraph: layer 0 is {root}, layer l
// holds the levels at shortest distance l.  Levels inside a layer are sorted.
// Throws when some active level is unreachable.
std::vector<std::vector<int>> bfs_layers(const TransitionGraph& g,
                                         const std::set<int>& active, int root);

}  // namespace taqr
