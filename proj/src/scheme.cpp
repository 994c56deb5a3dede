// Copyright 2026 taqr contributors
// SPDX-License-Identifier: Apache-2.0

#include "taqr/scheme.hpp"

#include <algorithm>

#include "taqr/error.hpp"

namespace taqr {

std::vector<std::pair<int, int>> elimination_steps(const TransitionGraph& g,
                                                   const std::set<int>& active,
                                                   int root) {
  const auto layers = bfs_layers(g, active, root);
  std::vector<int> depth(g.dim(), -1);
  for (std::size_t l = 0; l < layers.size(); ++l) {
    for (int v : layers[l]) depth[v] = static_cast<int>(l);
  }

  std::vector<std::pair<int, int>> steps;
  for (std::size_t l = layers.size() - 1; l >= 1; --l) {
    for (int z : layers[l]) {
      // Pivot on a neighbor one layer closer to the root; that column is
      // cleared only later (inner layers come after outer ones), so the pivot
      // entry is still alive when this step runs.
      int pivot = -1;
      double pivot_weight = 0.0;
      for (int w : g.neighbors(z)) {
        if (depth[w] != static_cast<int>(l) - 1 || !active.count(w)) continue;
        const double candidate_weight = g.weight(z, w);
        if (pivot == -1 || candidate_weight < pivot_weight ||
            (candidate_weight == pivot_weight && w < pivot)) {
          pivot = w;
          pivot_weight = candidate_weight;
        }
      }
      if (pivot == -1) {
        throw Error(ErrorKind::kInternal,
                    "BFS layering left level " + std::to_string(z) +
                        " without an inner-layer pivot");
      }
      steps.emplace_back(z, pivot);
    }
  }
  return steps;
}

namespace {

EliminationScheme build_scheme_impl(const TransitionGraph& g,
                                    const std::vector<int>* row_order) {
  if (row_order) {
    const auto n = row_order->size();
    if (n != static_cast<std::size_t>(g.dim()) &&
        n + 1 != static_cast<std::size_t>(g.dim())) {
      throw Error(ErrorKind::kValidation,
                  "row order must list d-1 or d of the " +
                      std::to_string(g.dim()) + " levels, got " +
                      std::to_string(n));
    }
  }

  EliminationScheme scheme;
  scheme.dim = g.dim();
  std::set<int> active;
  for (int v = 0; v < g.dim(); ++v) active.insert(v);

  std::size_t next = 0;
  while (active.size() > 1) {
    const auto candidates = removable_levels(g, active);
    int row;
    if (row_order) {
      row = (*row_order)[next++];
      if (!candidates.count(row)) {
        throw Error(ErrorKind::kValidation,
                    "level " + std::to_string(row) +
                        " cannot be eliminated at this point: not active or a "
                        "cut vertex of the remaining graph");
      }
    } else {
      row = *candidates.rbegin();  // highest-index removable level
    }
    scheme.rows.push_back({row, elimination_steps(g, active, row)});
    active.erase(row);
  }
  scheme.final_level = *active.begin();
  if (row_order && next + 1 == row_order->size() &&
      row_order->back() != scheme.final_level) {
    throw Error(ErrorKind::kValidation,
                "row order ends with level " + std::to_string(row_order->back()) +
                    " but level " + std::to_string(scheme.final_level) +
                    " is the one left over");
  }
  return scheme;
}

}  // namespace

EliminationScheme build_static_scheme(const TransitionGraph& g) {
  return build_scheme_impl(g, nullptr);
}

EliminationScheme build_static_scheme(const TransitionGraph& g,
                                      const std::vector<int>& row_order) {
  return build_scheme_impl(g, &row_order);
}

std::set<int> prune_for_row(const TransitionGraph& g,
                            const std::set<int>& active, int row,
                            const std::set<int>& zero_levels) {
  if (!active.count(row)) {
    throw Error(ErrorKind::kValidation,
                "row " + std::to_string(row) + " is not active");
  }
  if (!induced_connected(g, active)) {
    throw Error(ErrorKind::kValidation,
                "transition graph is disconnected over the active levels");
  }
  std::set<int> retained = active;
  for (int v : zero_levels) {
    if (v == row || !retained.count(v)) continue;
    std::set<int> without = retained;
    without.erase(v);
    if (induced_connected(g, without)) retained = std::move(without);
  }
  return retained;
}

}  // namespace taqr
