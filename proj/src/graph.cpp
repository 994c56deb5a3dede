// Copyright 2026 taqr contributors
// SPDX-License-Identifier: Apache-2.0

#include "taqr/graph.hpp"

#include <algorithm>
#include <functional>

#include "taqr/error.hpp"

namespace taqr {

TransitionGraph::TransitionGraph(
    int dim, const std::vector<std::pair<int, int>>& edges,
    const std::map<std::pair<int, int>, double>& weights)
    : dim_(dim) {
  if (dim < 1) {
    throw Error(ErrorKind::kValidation,
                "invalid graph dimension " + std::to_string(dim));
  }
  std::set<std::pair<int, int>> canonical;
  for (auto [i, j] : edges) {
    if (i == j) {
      throw Error(ErrorKind::kValidation,
                  "self-loop on level " + std::to_string(i));
    }
    if (i < 0 || j < 0 || i >= dim || j >= dim) {
      throw Error(ErrorKind::kValidation,
                  "edge (" + std::to_string(i) + ", " + std::to_string(j) +
                      ") out of range for dimension " + std::to_string(dim));
    }
    canonical.emplace(std::min(i, j), std::max(i, j));
  }
  edges_.assign(canonical.begin(), canonical.end());
  for (auto [key, w] : weights) {
    auto edge = std::make_pair(std::min(key.first, key.second),
                               std::max(key.first, key.second));
    if (!canonical.count(edge)) {
      throw Error(ErrorKind::kValidation,
                  "weight given for non-edge (" + std::to_string(key.first) +
                      ", " + std::to_string(key.second) + ")");
    }
    if (!(w > 0.0)) {
      throw Error(ErrorKind::kValidation, "edge weights must be positive");
    }
    weights_[edge] = w;
  }
  adjacency_.assign(dim, {});
  for (auto [i, j] : edges_) {
    adjacency_[i].push_back(j);
    adjacency_[j].push_back(i);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool TransitionGraph::has_edge(int i, int j) const {
  if (i > j) std::swap(i, j);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(i, j));
}

double TransitionGraph::weight(int i, int j) const {
  if (i > j) std::swap(i, j);
  const auto it = weights_.find({i, j});
  return it == weights_.end() ? 1.0 : it->second;
}

TransitionGraph preset_graph(const std::string& spec) {
  auto bad = [&spec](const std::string& why) -> Error {
    return Error(ErrorKind::kValidation,
                 "bad graph spec '" + spec + "': " + why +
                     " (expected line:<d>, star:<d> or bipartite:<d>:<p>)");
  };
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = spec.find(':', start);
    if (pos == std::string::npos) {
      parts.push_back(spec.substr(start));
      break;
    }
    parts.push_back(spec.substr(start, pos - start));
    start = pos + 1;
  }
  auto to_int = [&bad](const std::string& s) {
    try {
      std::size_t used = 0;
      const int value = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return value;
    } catch (const std::exception&) {
      throw bad("'" + s + "' is not an integer");
    }
  };

  if (parts[0] == "line" && parts.size() == 2) {
    const int dim = to_int(parts[1]);
    if (dim < 1) throw bad("dimension must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int n = 0; n + 1 < dim; ++n) edges.emplace_back(n, n + 1);
    return TransitionGraph(dim, edges);
  }
  if (parts[0] == "star" && parts.size() == 2) {
    const int dim = to_int(parts[1]);
    if (dim < 1) throw bad("dimension must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int n = 1; n < dim; ++n) edges.emplace_back(0, n);
    return TransitionGraph(dim, edges);
  }
  if (parts[0] == "bipartite" && parts.size() == 3) {
    const int dim = to_int(parts[1]);
    const int p = to_int(parts[2]);
    if (dim < 2) throw bad("dimension must be >= 2");
    if (p < 1 || p >= dim) throw bad("need 1 <= p < d");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < p; ++i) {
      for (int j = p; j < dim; ++j) edges.emplace_back(i, j);
    }
    return TransitionGraph(dim, edges);
  }
  throw bad("unrecognized family '" + parts[0] + "'");
}

bool induced_connected(const TransitionGraph& g, const std::set<int>& active) {
  if (active.size() <= 1) return true;
  std::set<int> seen;
  std::vector<int> stack{*active.begin()};
  seen.insert(*active.begin());
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v)) {
      if (active.count(w) && !seen.count(w)) {
        seen.insert(w);
        stack.push_back(w);
      }
    }
  }
  return seen.size() == active.size();
}

std::set<int> removable_levels(const TransitionGraph& g,
                               const std::set<int>& active) {
  if (active.size() < 2) return {};
  if (!induced_connected(g, active)) {
    throw Error(ErrorKind::kValidation,
                "transition graph is disconnected over the active levels");
  }
  // Articulation points of the induced subgraph by DFS low-link; everything
  // else can be deleted without breaking connectivity.
  std::map<int, int> disc, low;
  std::set<int> articulation;
  int counter = 0;
  std::function<void(int, int)> dfs = [&](int v, int parent) {
    disc[v] = low[v] = counter++;
    int children = 0;
    for (int w : g.neighbors(v)) {
      if (!active.count(w)) continue;
      if (!disc.count(w)) {
        ++children;
        dfs(w, v);
        low[v] = std::min(low[v], low[w]);
        if (parent != -1 && low[w] >= disc[v]) articulation.insert(v);
      } else if (w != parent) {
        low[v] = std::min(low[v], disc[w]);
      }
    }
    if (parent == -1 && children > 1) articulation.insert(v);
  };
  dfs(*active.begin(), -1);

  std::set<int> removable;
  for (int v : active) {
    if (!articulation.count(v)) removable.insert(v);
  }
  return removable;
}

std::vector<std::vector<int>> bfs_layers(const TransitionGraph& g,
                                         const std::set<int>& active,
                                         int root) {
  if (!active.count(root)) {
    throw Error(ErrorKind::kValidation,
                "BFS root " + std::to_string(root) + " is not active");
  }
  std::set<int> seen{root};
  std::vector<std::vector<int>> layers{{root}};
  while (true) {
    std::vector<int> next;
    for (int v : layers.back()) {
      for (int w : g.neighbors(v)) {
        if (active.count(w) && !seen.count(w)) {
          seen.insert(w);
          next.push_back(w);
        }
      }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    layers.push_back(std::move(next));
  }
  if (seen.size() != active.size()) {
    throw Error(ErrorKind::kValidation,
                "transition graph is disconnected over the active levels");
  }
  return layers;
}

}  // namespace taqr
