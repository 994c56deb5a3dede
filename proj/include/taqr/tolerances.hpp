// Copyright 2026 taqr contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace taqr {

// All thresholds are absolute: unitary entries are bounded by 1 in magnitude,
// so absolute and relative tolerances coincide up to the dimension factor.
inline constexpr double kUnitaryTol = 1e-8;        // admission check for input matrices
inline constexpr double kPulseUnitaryTol = 1e-12;  // every synthesized pulse matrix
inline constexpr double kZeroTol = 1e-12;          // treat-as-zero / omit-pulse threshold
inline constexpr double kSparseTol = 1e-9;         // zero-pattern detection (adaptive mode)
inline constexpr double kRowResidualTol = 1e-11;   // guard on the residual of an eliminated row
inline constexpr double kReconstructionTolPerDim = 1e-9;  // distance budget, scaled by d
inline constexpr double kPhotonicTol = 1e-10;      // beam-splitter conversion budget

}  // namespace taqr
