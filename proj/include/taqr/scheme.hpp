// Copyright 2026 taqr contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "taqr/graph.hpp"

namespace taqr {

// Precomputed elimination plan for one transition graph: the order in which
// rows are zeroed out and, per row, the ordered (eliminate, pivot) column
// pairs.  Every pair is an edge of the graph.
struct EliminationScheme {
  struct Row {
    int row = 0;                                // the level being eliminated
    std::vector<std::pair<int, int>> steps;     // (z, p): zero column z via p
  };
  int dim = 0;
  std::vector<Row> rows;   // elimination order, dim-1 entries
  int final_level = 0;     // the level left over, carries the last phase
};

// Ordered (z, p) pairs that clear row `root` over the active levels: walk the
// BFS layers inward (deepest first, ascending index inside a layer); each
// level's pivot is its neighbor in the next-inner layer — the least noisy one
// by edge weight, lowest index on ties.  The innermost pivot is `root` itself.
std::vector<std::pair<int, int>> elimination_steps(const TransitionGraph& g,
                                                   const std::set<int>& active,
                                                   int root);

// Fixed scheme valid for any unitary on this graph.  Rows are chosen as the
// highest-index removable level, which reproduces the natural bottom-up order
// on line and star graphs.
EliminationScheme build_static_scheme(const TransitionGraph& g);

// Same, but with the row order forced.  `row_order` lists either the first
// dim-1 eliminated levels or all dim (the last then names the leftover level);
// every entry must be removable at its turn.
EliminationScheme build_static_scheme(const TransitionGraph& g,
                                       const std::vector<int>& row_order);

// Adaptive-mode pruning: drop the zero-pattern levels of one row from the
// active set, greedily in ascending order, skipping any whose removal would
// disconnect the remainder.  Returns the retained set (always contains `row`).
std::set<int> prune_for_row(const TransitionGraph& g,
                            const std::set<int>& active, int row,
                            const std::set<int>& zero_levels);

}  // namespace taqr
