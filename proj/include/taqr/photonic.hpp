// Copyright 2026 taqr contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "taqr/pulse.hpp"

namespace taqr {

// Rewrite every rotation as phase-shift/beam-splitter/phase-shift:
//   R(θ,φ)^{ij} = Ph(φ-π/2)_j ∘ BS(cos θ/2)^{ij} ∘ Ph(π/2-φ)_j
// valid for θ in [0, π].  Rotations outside that range are first reduced:
//   R(-θ, φ)  = R(θ, φ+π)
//   R(θ, φ)   = Ph_i(π) · Ph_j(π) · R(2π-θ, φ+π)   for θ in (π, 2π]
// Phase pulses with |θ| ≤ 1e-12 and identity beam splitters are dropped, so
// each surviving rotation contributes exactly one beam splitter.  The composed
// matrix is preserved to 1e-10.  Beam-splitter input is rejected (already
// photonic).
PulseSequence export_photonic(const PulseSequence& seq);

}  // namespace taqr
