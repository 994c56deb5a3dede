// Copyright 2026 taqr contributors
// SPDX-License-Identifier: Apache-2.0

#include "taqr/batch.hpp"

#include <atomic>
#include <cstdint>
#include <exception>

#include "taqr/error.hpp"

namespace taqr {

namespace {

PulseSequence decompose_one(const ComplexMatrix& u, const TransitionGraph& g,
                            const EliminationScheme* scheme,
                            DecompositionMode mode) {
  switch (mode) {
    case DecompositionMode::kStatic:
      return decompose_static(u, *scheme);
    case DecompositionMode::kAdaptive:
      return decompose_adaptive(u, g);
    case DecompositionMode::kSwapBaseline:
      return swap_route_baseline(u, g);
  }
  throw Error(ErrorKind::kInternal, "unhandled decomposition mode");
}

}  // namespace

std::vector<PulseSequence> decompose_batch_serial(
    const std::vector<ComplexMatrix>& unitaries, const TransitionGraph& g,
    DecompositionMode mode) {
  EliminationScheme scheme;
  if (mode == DecompositionMode::kStatic) scheme = build_static_scheme(g);
  std::vector<PulseSequence> out(unitaries.size());
  for (std::size_t i = 0; i < unitaries.size(); ++i) {
    out[i] = decompose_one(unitaries[i], g, &scheme, mode);
  }
  return out;
}

std::vector<PulseSequence> decompose_batch_parallel(
    const std::vector<ComplexMatrix>& unitaries, const TransitionGraph& g,
    DecompositionMode mode) {
  EliminationScheme scheme;
  if (mode == DecompositionMode::kStatic) scheme = build_static_scheme(g);
  std::vector<PulseSequence> out(unitaries.size());

  // Exceptions must not unwind across the parallel region; keep the first one
  // and rethrow after the loop.
  std::exception_ptr first_error = nullptr;
  std::atomic<bool> failed{false};

  const auto count = static_cast<std::int64_t>(unitaries.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    if (failed.load(std::memory_order_relaxed)) continue;
    try {
      out[i] = decompose_one(unitaries[i], g, &scheme, mode);
    } catch (...) {
#pragma omp critical(taqr_batch_error)
      {
        if (!failed.exchange(true)) first_error = std::current_exception();
      }
    }
  }
  if (first_error) std::rethrow_exception(first_error);
  return out;
}

}  // namespace taqr
