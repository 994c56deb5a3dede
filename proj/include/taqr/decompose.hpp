// Copyright 2026 taqr contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <utility>

#include "taqr/pulse.hpp"
#include "taqr/scheme.hpp"
#include "taqr/tolerances.hpp"

namespace taqr {

enum class DecompositionMode { kStatic, kAdaptive, kSwapBaseline };

// Angles (θ, φ) of the rotation that zeroes matrix entry u_z against pivot
// entry u_p:
//   θ = 2·atan2(|u_z|, |u_p|) ∈ [0, π]
//   φ = π/2 + arg(u_z) - arg(u_p), normalized to (-π, π], with arg(0) := 0
// so that cos(θ/2)·u_z + i·e^{iφ}·sin(θ/2)·u_p = 0.  Throws when both inputs
// are below 1e-12 (nothing to eliminate — callers skip that step).
std::pair<double, double> solve_elimination(Complex u_z, Complex u_p);

// Zero all off-diagonal entries of one row in place, following the given
// (eliminate, pivot) column steps; entries already below 1e-12 are skipped.
// Ends with a phase pulse absorbing arg(u[row][row]) and clamps the row and
// column to exact 0/1 so later rows work on a clean sub-block.  Returns the
// recorded pulses in application order.
std::vector<Pulse> eliminate_row(ComplexMatrix& u, int row,
                                 const std::vector<std::pair<int, int>>& steps);

// Run a precomputed scheme over a unitary.  The result reconstructs u exactly
// (global phase included): compose_pulses(result) = u to 1e-9·d.
PulseSequence decompose_static(const ComplexMatrix& u,
                               const EliminationScheme& scheme);
PulseSequence decompose_static(const ComplexMatrix& u,
                               const TransitionGraph& g);

// Per-matrix variant: each round, among the levels that can be removed
// without disconnecting the graph, eliminate the one whose row is cheapest
// after zero-pattern pruning (fewest elimination steps; highest index on
// ties).  Entries at or below sparse_tol count as zero.
PulseSequence decompose_adaptive(const ComplexMatrix& u,
                                 const TransitionGraph& g,
                                 double sparse_tol = kSparseTol);

// Naive comparison baseline: eliminate with the dense row-by-row plan that
// assumes every (k-1, k) transition, then rewrite each disallowed rotation as
// a swap-conjugation Sw^{ki} ∘ R^{kj} ∘ Sw^{ik} along a shortest path in the
// graph.  On a line graph this degenerates to decompose_static.
PulseSequence swap_route_baseline(const ComplexMatrix& u,
                                  const TransitionGraph& g);

struct VerificationReport {
  double distance = 0.0;        // ‖compose(seq) − u‖_F
  int rotation_count = 0;
  int phase_count = 0;
  bool all_edges_allowed = false;
  double elapsed_ms = 0.0;
  bool passed = false;          // distance ≤ tol and all edges allowed
};

// Recompose the sequence and compare against u.  Beam-splitter pulses are
// rejected: legality against a transition graph is defined for rotations.
VerificationReport verify(const ComplexMatrix& u, const PulseSequence& seq,
                          const TransitionGraph& g, double tol);

}  // namespace taqr
