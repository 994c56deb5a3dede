// Copyright 2026 taqr contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <variant>
#include <vector>

#include "taqr/matrix.hpp"

namespace taqr {

// Two-level rotation on span{|i>,|j>} with i < j:
//   R(θ,φ) = [[cos(θ/2),           -i e^{-iφ} sin(θ/2)],
//             [-i e^{+iφ} sin(θ/2), cos(θ/2)          ]]
// Canonical form keeps θ in (-2π, 2π] and φ in (-π, π].
struct Rotation {
  int i = 0;
  int j = 1;
  double theta = 0.0;
  double phi = 0.0;
  bool operator==(const Rotation&) const = default;
};

// Ph_k(θ) = diag(1, …, e^{iθ} at level k, …, 1).
struct Phase {
  int level = 0;
  double theta = 0.0;
  bool operator==(const Phase&) const = default;
};

// Photonic beam splitter on span{|i>,|j>} with i < j and r in [0, 1]:
//   BS(r) = [[r, -sqrt(1-r²)], [sqrt(1-r²), r]]
struct BeamSplitter {
  int i = 0;
  int j = 1;
  double r = 1.0;
  bool operator==(const BeamSplitter&) const = default;
};

using Pulse = std::variant<Rotation, Phase, BeamSplitter>;

// Pulses are listed in application order: the first element acts first on the
// state, so the composed matrix is M(p_m)·…·M(p_1).
struct PulseSequence {
  int dim = 0;
  std::vector<Pulse> pulses;
};

double normalize_theta(double theta);  // to (-2π, 2π]
double normalize_phi(double phi);      // to (-π, π]

// Canonicalizing constructors.  make_rotation accepts any i ≠ j and rewrites
// level order i > j as the equivalent rotation on (j, i) with φ negated.
Rotation make_rotation(int i, int j, double theta, double phi);
Phase make_phase(int level, double theta);
BeamSplitter make_beam_splitter(int i, int j, double r);

// d×d matrix of a single pulse (identity outside its subspace).
ComplexMatrix pulse_to_matrix(const Pulse& p, int dim);

// M(p_m)·…·M(p_1) for seq = [p_1,…,p_m].
ComplexMatrix compose_pulses(const PulseSequence& seq);

// In-place right multiplication U ← U · M(R^{ij}(-θ, φ)): only columns i and j
// change.  This is the elimination step's fast path.
ComplexMatrix& right_mix_columns(ComplexMatrix& u, int i, int j, double theta,
                                 double phi);

int rotation_count(const PulseSequence& seq);
int phase_count(const PulseSequence& seq);

}  // namespace taqr
