// Copyright 2026 taqr contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "taqr/decompose.hpp"

namespace taqr {

// Decompose many independent unitaries against one graph.  The serial variant
// is the reference; the parallel variant fans the loop out over OpenMP
// threads and must produce pulse-for-pulse identical results (individual
// decompositions are deterministic and share nothing but the read-only graph
// and scheme).
std::vector<PulseSequence> decompose_batch_serial(
    const std::vector<ComplexMatrix>& unitaries, const TransitionGraph& g,
    DecompositionMode mode);

std::vector<PulseSequence> decompose_batch_parallel(
    const std::vector<ComplexMatrix>& unitaries, const TransitionGraph& g,
    DecompositionMode mode);

}  // namespace taqr
